#include "stockpoly/render.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stockpoly {
namespace {

constexpr const char* kMinus = "\xE2\x88\x92";  // U+2212

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string pad_right(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string trim_lines(const std::string& text) {
  std::string out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::size_t last = end;
    while (last > start && text[last - 1] == ' ') --last;
    out.append(text, start, last - start);
    if (end < text.size()) out += '\n';
    start = end + 1;
  }
  return out;
}

std::string svg_open(int width, int height) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width
      << ' ' << height << "\" font-family=\"monospace\" font-size=\"12\">\n";
  return out.str();
}

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string render_wiring(const WiringWord& word, const std::vector<std::string>& labels, RenderFormat format) {
  if (static_cast<int>(labels.size()) != word.n)
    throw std::invalid_argument("render_wiring: " + std::to_string(labels.size()) + " labels for " + std::to_string(word.n) + " wires");
  const auto n = static_cast<std::size_t>(word.n);
  const std::size_t cols = word.letters.size();

  // arrangement after each column: wire_at[t][p] = starting position of the wire at position p
  std::vector<std::vector<std::size_t>> wire_at(cols + 1, std::vector<std::size_t>(n));
  std::iota(wire_at[0].begin(), wire_at[0].end(), std::size_t{0});
  for (std::size_t t = 0; t < cols; ++t) {
    wire_at[t + 1] = wire_at[t];
    const auto p = static_cast<std::size_t>(word.letters[t]);
    std::swap(wire_at[t + 1][p - 1], wire_at[t + 1][p]);
  }

  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());

  if (format == RenderFormat::Ascii) {
    std::ostringstream out;
    out << std::string(label_width + 1, ' ');
    for (std::size_t t = 0; t < cols; ++t) out << pad_right("s" + std::to_string(word.letters[t]), 4);
    out << "\n";
    for (std::size_t p = 0; p < n; ++p) {
      out << pad_right(labels[wire_at[0][p]], label_width) << ' ';
      for (std::size_t t = 0; t < cols; ++t) {
        const auto letter = static_cast<std::size_t>(word.letters[t]);
        out << ((p + 1 == letter || p == letter) ? "-X--" : "----");
      }
      out << ' ' << labels[wire_at[cols][p]] << "\n";
    }
    return trim_lines(out.str());
  }

  const int char_w = 8;
  const int left = 16 + static_cast<int>(label_width) * char_w;
  const int col_w = 40;
  const int row_h = 30;
  const int top = 30;
  const int width = left + static_cast<int>(cols) * col_w + 16 + static_cast<int>(label_width) * char_w + 16;
  const int height = top + static_cast<int>(n) * row_h;
  auto y_of = [&](std::size_t p) { return top + static_cast<int>(p) * row_h; };
  auto x_of = [&](std::size_t t) { return left + static_cast<int>(t) * col_w; };

  std::ostringstream out;
  out << svg_open(width, height);
  out << "  <g id=\"wires\" fill=\"none\" stroke-width=\"2\">\n";
  for (std::size_t w = 0; w < n; ++w) {
    out << "    <polyline stroke=\"" << kPalette[w % std::size(kPalette)] << "\" points=\"";
    for (std::size_t t = 0; t <= cols; ++t) {
      std::size_t p = 0;
      while (wire_at[t][p] != w) ++p;
      out << (t ? " " : "") << x_of(t) << ',' << y_of(p);
    }
    out << "\"/>\n";
  }
  out << "  </g>\n  <g id=\"crossings\" fill=\"#2ca02c\">\n";
  for (std::size_t t = 0; t < cols; ++t) {
    const auto p = static_cast<std::size_t>(word.letters[t]);
    out << "    <circle cx=\"" << x_of(t) + col_w / 2 << "\" cy=\"" << y_of(p - 1) + row_h / 2 << "\" r=\"4\"><title>s" << p
        << "</title></circle>\n";
  }
  out << "  </g>\n  <g id=\"labels\">\n";
  for (std::size_t p = 0; p < n; ++p) {
    out << "    <text x=\"" << left - 8 << "\" y=\"" << y_of(p) + 4 << "\" text-anchor=\"end\">" << escape_xml(labels[wire_at[0][p]])
        << "</text>\n";
    out << "    <text x=\"" << x_of(cols) + 8 << "\" y=\"" << y_of(p) + 4 << "\">" << escape_xml(labels[wire_at[cols][p]])
        << "</text>\n";
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

std::string render_chords(const DecoratedPermutation& dp, RenderFormat format, const std::vector<std::string>& labels) {
  const int n = dp.size();
  if (!labels.empty() && static_cast<int>(labels.size()) != n) throw std::invalid_argument("render_chords: label count mismatch");
  auto name = [&](int i) { return labels.empty() ? std::to_string(i) : labels[static_cast<std::size_t>(i - 1)]; };
  int right_arcs = 0, left_arcs = 0, right_loops = 0, left_loops = 0;
  for (int i = 1; i <= n; ++i) {
    if (dp(i) > i) ++right_arcs;
    else if (dp(i) < i) ++left_arcs;
    else if (dp.color(i) == Orientation::Right) ++right_loops;
    else ++left_loops;
  }

  if (format == RenderFormat::Ascii) {
    std::ostringstream out;
    out << "decorated permutation " << to_string(dp) << "\n";
    out << "points ";
    for (int i = 1; i <= n; ++i) out << ' ' << i << '=' << name(i);
    out << "\n";
    for (int i = 1; i <= n; ++i) {
      if (dp(i) != i) out << "  arc  " << i << " -> " << dp(i) << "  " << (dp(i) > i ? "right" : "left") << "\n";
      else out << "  loop " << i << "       " << (dp.color(i) == Orientation::Right ? "right" : "left") << "\n";
    }
    out << "right arcs " << right_arcs << ", left arcs " << left_arcs << ", right loops " << right_loops << ", left loops "
        << left_loops << "\n";
    return trim_lines(out.str());
  }

  const int step = 80;
  const int base = 40 + 20 * n + 40;
  const int width = 2 * 40 + step * std::max(n - 1, 0) + 40;
  const int height = base + 40;
  auto x_of = [&](int i) { return 60 + step * (i - 1); };
  std::ostringstream out;
  out << svg_open(width, height);
  out << "  <defs>\n    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"7\" markerHeight=\"7\" "
         "orient=\"auto-start-reverse\">\n      <path d=\"M 0 0 L 10 5 L 0 10 z\"/>\n    </marker>\n  </defs>\n";
  out << "  <line x1=\"" << x_of(1) - 20 << "\" y1=\"" << base << "\" x2=\"" << x_of(n) + 20 << "\" y2=\"" << base
      << "\" stroke=\"#999\"/>\n";
  out << "  <g id=\"chords\" fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\">\n";
  for (int i = 1; i <= n; ++i) {
    const int x = x_of(i);
    if (dp(i) != i) {
      const int xj = x_of(dp(i));
      const int lift = 20 + 20 * std::abs(dp(i) - i);
      out << "    <path class=\"" << (dp(i) > i ? "right" : "left") << "\" d=\"M " << x << ' ' << base << " C " << x << ' '
          << base - lift << ' ' << xj << ' ' << base - lift << ' ' << xj << ' ' << base << "\" marker-end=\"url(#arrow)\"/>\n";
    } else {
      const int dir = dp.color(i) == Orientation::Right ? 1 : -1;
      out << "    <path class=\"loop-" << (dir > 0 ? "right" : "left") << "\" d=\"M " << x << ' ' << base << " C " << x << ' '
          << base - 40 << ' ' << x + dir * 30 << ' ' << base - 40 << ' ' << x + dir * 30 << ' ' << base - 15
          << "\" marker-end=\"url(#arrow)\"/>\n";
    }
  }
  out << "  </g>\n  <g id=\"points\">\n";
  for (int i = 1; i <= n; ++i) {
    out << "    <circle cx=\"" << x_of(i) << "\" cy=\"" << base << "\" r=\"4\"/>\n";
    out << "    <text x=\"" << x_of(i) << "\" y=\"" << base + 20 << "\" text-anchor=\"middle\">" << escape_xml(name(i)) << "</text>\n";
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

std::string render_hooks(const BoundedAffinePermutation& f, const std::vector<int>& r, RenderFormat format) {
  const int n = f.size();
  if (static_cast<int>(r.size()) != n) throw std::invalid_argument("render_hooks: need one r value per hook");
  const int k = f.k();
  const int sum = std::accumulate(r.begin(), r.end(), 0);
  std::ostringstream footer;
  footer << sum << ' ' << kMinus << ' ' << k * k << " = " << sum - k * k;

  if (format == RenderFormat::Ascii) {
    std::ostringstream out;
    out << "         ";
    for (int c = 1; c <= 2 * n; ++c) out << pad_right(std::to_string(c), 3);
    out << "\n";
    for (int i = 1; i <= n; ++i) {
      std::string row = pad_right(std::to_string(i) + "->" + std::to_string(f(i)), 9);
      for (int c = 1; c <= 2 * n; ++c) {
        std::string cell = ".  ";
        if (f(i) == i && c == i) cell = "o  ";
        else if (c == i) cell = "+--";
        else if (c == f(i)) cell = "+  ";
        else if (c > i && c < f(i)) cell = "---";
        row += cell;
      }
      out << row << " r=" << r[static_cast<std::size_t>(i - 1)] << "\n";
    }
    out << "dim = " << footer.str() << "\n";
    return trim_lines(out.str());
  }

  const int col_w = 40, row_h = 30, left = 60, top = 40;
  const int width = left + 2 * n * col_w + 80;
  const int axis = top + n * row_h;
  const int height = axis + 60;
  auto x_of = [&](int c) { return left + (c - 1) * col_w; };
  std::ostringstream out;
  out << svg_open(width, height);
  out << "  <g id=\"grid\" stroke=\"#ccc\">\n";
  for (int c = 1; c <= 2 * n; ++c)
    out << "    <line x1=\"" << x_of(c) << "\" y1=\"" << top - 10 << "\" x2=\"" << x_of(c) << "\" y2=\"" << axis << "\"/>\n";
  out << "  </g>\n  <g id=\"columns\" text-anchor=\"middle\">\n";
  for (int c = 1; c <= 2 * n; ++c) out << "    <text x=\"" << x_of(c) << "\" y=\"" << axis + 18 << "\">" << c << "</text>\n";
  out << "  </g>\n  <g id=\"hooks\" fill=\"none\" stroke=\"#000\" stroke-width=\"2\">\n";
  for (int i = 1; i <= n; ++i) {
    const int y = top + (i - 1) * row_h;
    out << "    <polyline points=\"" << x_of(i) << ',' << axis << ' ' << x_of(i) << ',' << y << ' ' << x_of(f(i)) << ',' << y
        << "\"/>\n";
  }
  out << "  </g>\n  <g id=\"ranks\">\n";
  for (int i = 1; i <= n; ++i) {
    const int y = top + (i - 1) * row_h;
    out << "    <text x=\"" << x_of(f(i)) + 6 << "\" y=\"" << y - 4 << "\">r[" << i << ',' << f(i) << "]=" << r[static_cast<std::size_t>(i - 1)]
        << "</text>\n";
  }
  out << "  </g>\n  <text id=\"footer\" x=\"" << left << "\" y=\"" << axis + 44 << "\">dim = " << footer.str() << "</text>\n</svg>\n";
  return out.str();
}

}  // namespace stockpoly
