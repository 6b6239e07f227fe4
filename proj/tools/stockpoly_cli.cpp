// stockpoly: price tables -> crossings -> decorated permutations -> positroids -> polytopes.
//
// Exit codes: 0 success, 2 input validation error, 3 internal invariant breach.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "stockpoly/ingest.hpp"
#include "stockpoly/render.hpp"
#include "stockpoly/report.hpp"

namespace {

using namespace stockpoly;

constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;

struct InvariantBreach : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Date require_date(const std::string& text, const char* flag) {
  if (auto d = parse_iso_date(text)) return *d;
  throw InputError(std::string(flag) + ": expected an ISO-8601 date (YYYY-MM-DD), got `" + text + "`");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<int> parse_ints(const std::string& text, const char* what) {
  std::vector<int> out;
  for (const auto& item : split(text, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError(std::string(what) + ": `" + item + "` is not an integer");
    }
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot write " + out_path);
  out << text;
}

struct DateRange {
  std::string csv;
  std::string ref;
  std::string end;
};

void add_range_options(CLI::App* cmd, DateRange& range, bool required) {
  auto* csv = cmd->add_option("csv", range.csv, "price CSV (date,<ticker>,...)");
  auto* ref = cmd->add_option("--ref-date", range.ref, "reference date (YYYY-MM-DD)");
  auto* end = cmd->add_option("--end-date", range.end, "target/end date (YYYY-MM-DD); defaults to the reference date");
  if (required) {
    csv->required();
    ref->required();
  } else {
    ref->needs(csv);
    end->needs(csv);
  }
}

struct LoadedRange {
  PriceTable table;
  Date ref;
  Date end;
};

LoadedRange load(const DateRange& range) {
  PriceTable table = read_price_csv(range.csv);
  const Date ref = require_date(range.ref, "--ref-date");
  const Date end = range.end.empty() ? ref : require_date(range.end, "--end-date");
  return {std::move(table), ref, end};
}

RenderFormat parse_format(const std::string& f) { return f == "ascii" ? RenderFormat::Ascii : RenderFormat::Svg; }

DecoratedPermutation parse_decorated(const std::string& perm_text, const std::string& colors_text) {
  Permutation perm{parse_ints(perm_text, "--perm")};
  std::vector<std::optional<Orientation>> colors(static_cast<std::size_t>(perm.size()));
  for (int i : perm.fixed_points()) colors[static_cast<std::size_t>(i - 1)] = Orientation::Right;
  for (const auto& item : split(colors_text, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw InputError("--colors: expected point:R or point:L, got `" + item + "`");
    const int point = parse_ints(item.substr(0, colon), "--colors").at(0);
    const std::string o = item.substr(colon + 1);
    if (point < 1 || point > perm.size() || !perm.is_fixed(point)) throw InputError("--colors: " + std::to_string(point) + " is not a fixed point");
    if (o != "R" && o != "L") throw InputError("--colors: orientation must be R or L");
    colors[static_cast<std::size_t>(point - 1)] = o == "R" ? Orientation::Right : Orientation::Left;
  }
  return DecoratedPermutation{std::move(perm), std::move(colors)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stock crossings, Grassmann necklaces, positroids and their polytopes"};
  app.require_subcommand(1);

  DateRange analyze_range;
  bool facets = false, self_check = false;
  std::string analyze_format = "json", analyze_out;
  auto* analyze_cmd = app.add_subcommand("analyze", "full analysis between two dates");
  add_range_options(analyze_cmd, analyze_range, true);
  analyze_cmd->add_flag("--facets", facets, "enumerate polytope facets (n <= 8)");
  analyze_cmd->add_option("--format", analyze_format, "json or text")->check(CLI::IsMember({"json", "text"}));
  analyze_cmd->add_option("--out", analyze_out, "write to a file instead of stdout");
  analyze_cmd->add_flag("--check", self_check, "re-derive the report and fail with exit 3 on any inconsistency");

  DateRange chain_range;
  std::string chain_out;
  auto* chain_cmd = app.add_subcommand("chain", "cell dimension after every crossing");
  add_range_options(chain_cmd, chain_range, true);
  chain_cmd->add_option("--out", chain_out, "write to a file instead of stdout");

  DateRange render_range;
  std::string kind, render_format = "svg", render_out, word_text, labels_text, perm_text, colors_text;
  auto* render_cmd = app.add_subcommand("render", "wiring, chord or hook diagram");
  render_cmd->add_option("kind", kind, "wiring | chords | hooks")->required()->check(CLI::IsMember({"wiring", "chords", "hooks"}));
  add_range_options(render_cmd, render_range, false);
  render_cmd->add_option("--word", word_text, "wiring word letters, e.g. 2,3,1");
  render_cmd->add_option("--labels", labels_text, "comma-separated wire labels");
  render_cmd->add_option("--perm", perm_text, "one-line permutation, e.g. 2,4,1,3");
  render_cmd->add_option("--colors", colors_text, "fixed point orientations, e.g. 1:R,4:L (default R)");
  render_cmd->add_option("--format", render_format, "svg or ascii")->check(CLI::IsMember({"svg", "ascii"}));
  render_cmd->add_option("--out", render_out, "write to a file instead of stdout");

  std::string report_path;
  auto* check_cmd = app.add_subcommand("check", "validate a JSON report for internal consistency");
  check_cmd->add_option("report", report_path, "report JSON ('-' for stdin)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*analyze_cmd) {
      const auto [table, ref, end] = load(analyze_range);
      const AnalysisReport report = analyze(table, ref, end, facets);
      if (self_check) {
        const auto problems = check_report(to_json(report, table));
        if (!problems.empty()) throw InvariantBreach("report failed self-check: " + problems.front());
      }
      emit(analyze_format == "json" ? canonical_json(report, table) : to_text(report, table), analyze_out);
    } else if (*chain_cmd) {
      const auto [table, ref, end] = load(chain_range);
      emit(chain_to_text(market_chain(table, ref, end), table, ref), chain_out);
    } else if (*render_cmd) {
      const RenderFormat format = parse_format(render_format);
      std::string doc;
      if (!render_range.csv.empty()) {
        if (render_range.ref.empty()) throw InputError("render: --ref-date is required with a CSV");
        const auto [table, ref, end] = load(render_range);
        const auto series = rank_series(table, ref, end);
        std::vector<std::string> labels;
        for (std::size_t s : series.front().order) labels.push_back(table.tickers()[s]);
        const auto state = decorate(permutation_at(table, ref, end), table, ref, end);
        if (kind == "wiring")
          doc = render_wiring(wiring_word(crossing_stream(table, ref, end), static_cast<int>(labels.size())), labels, format);
        else if (kind == "chords")
          doc = render_chords(state, format, labels);
        else
          doc = render_hooks(affine_lift(state), dimension_terms(state), format);
      } else if (kind == "wiring") {
        const auto letters = parse_ints(word_text, "--word");
        auto labels = split(labels_text, ',');
        if (labels.empty()) {
          // without labels the wire count is the smallest that fits the word
          if (letters.empty()) throw InputError("render wiring: an empty --word needs --labels");
          const int n = *std::max_element(letters.begin(), letters.end()) + 1;
          for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
        }
        doc = render_wiring(WiringWord{static_cast<int>(labels.size()), letters}, labels, format);
      } else {
        if (perm_text.empty()) throw InputError("render " + kind + ": --perm (or a CSV) is required");
        const auto state = parse_decorated(perm_text, colors_text);
        doc = kind == "chords" ? render_chords(state, format, split(labels_text, ','))
                               : render_hooks(affine_lift(state), dimension_terms(state), format);
      }
      emit(doc, render_out);
    } else if (*check_cmd) {
      nlohmann::json doc;
      try {
        if (report_path == "-") {
          doc = nlohmann::json::parse(std::cin);
        } else {
          std::ifstream in(report_path);
          if (!in) throw InputError("cannot open " + report_path);
          doc = nlohmann::json::parse(in);
        }
      } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed report: ") + e.what());
      }
      std::vector<std::string> problems;
      try {
        problems = check_report(doc);
      } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed report: ") + e.what());
      }
      for (const auto& p : problems) std::cerr << "inconsistent: " << p << "\n";
      if (!problems.empty()) return kExitInvariant;
      std::cout << "ok\n";
    }
  } catch (const InvariantBreach& e) {
    std::cerr << "stockpoly: internal invariant breach: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const InputError& e) {
    std::cerr << "stockpoly: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "stockpoly: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "stockpoly: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "stockpoly: internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return 0;
}
