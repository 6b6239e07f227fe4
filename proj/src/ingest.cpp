#include "stockpoly/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace stockpoly {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string located(const std::string& what, std::size_t row, std::size_t column) {
  std::string loc = "row " + std::to_string(row);
  if (column > 0) loc += ", column " + std::to_string(column);
  return loc + ": " + what;
}

}  // namespace

std::optional<Date> parse_iso_date(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  int y = 0;
  unsigned m = 0, d = 0;
  auto num = [&](std::size_t pos, std::size_t len, auto& out) {
    const char* first = text.data() + pos;
    auto [ptr, ec] = std::from_chars(first, first + len, out);
    return ec == std::errc{} && ptr == first + len;
  };
  if (!num(0, 4, y) || !num(5, 2, m) || !num(8, 2, d)) return std::nullopt;
  const Date date{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
  if (!date.ok()) return std::nullopt;
  return date;
}

std::string format_iso_date(Date d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()), static_cast<unsigned>(d.month()),
                static_cast<unsigned>(d.day()));
  return buf;
}

std::optional<Price> Price::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const std::size_t dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() || (dot != std::string_view::npos && frac.empty())) return std::nullopt;
  if (frac.size() > static_cast<std::size_t>(kScaleDigits)) return std::nullopt;
  auto all_digits = [](std::string_view s) { return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }); };
  if (!all_digits(whole) || !all_digits(frac) || whole.size() > 12) return std::nullopt;

  std::int64_t units = 0;
  std::from_chars(whole.data(), whole.data() + whole.size(), units);
  std::int64_t micros = 0;
  if (!frac.empty()) {
    std::from_chars(frac.data(), frac.data() + frac.size(), micros);
    for (std::size_t i = frac.size(); i < static_cast<std::size_t>(kScaleDigits); ++i) micros *= 10;
  }
  const std::int64_t total = units * kScale + micros;
  return Price{negative ? -total : total};
}

std::string Price::to_string() const {
  const std::int64_t mag = micros_ < 0 ? -micros_ : micros_;
  std::string frac = std::to_string(mag % kScale);
  frac.insert(0, static_cast<std::size_t>(kScaleDigits) - frac.size(), '0');
  while (frac.size() > 2 && frac.back() == '0') frac.pop_back();
  return (micros_ < 0 ? "-" : "") + std::to_string(mag / kScale) + "." + frac;
}

InputError::InputError(const std::string& what, std::size_t row, std::size_t column)
    : std::runtime_error(row > 0 ? located(what, row, column) : what), row_{row}, column_{column} {}

PriceTable::PriceTable(std::vector<std::string> tickers, std::vector<Date> dates, std::vector<Price> prices)
    : tickers_{std::move(tickers)}, dates_{std::move(dates)}, prices_{std::move(prices)} {
  if (prices_.size() != tickers_.size() * dates_.size()) throw InputError("price matrix does not match dates x tickers");
  for (std::size_t d = 1; d < dates_.size(); ++d)
    if (!(dates_[d - 1] < dates_[d])) throw InputError("dates must be strictly increasing");
  for (Price p : prices_)
    if (p.micros() <= 0) throw InputError("prices must be positive");
}

std::optional<std::size_t> PriceTable::find_date(Date d) const {
  const auto it = std::lower_bound(dates_.begin(), dates_.end(), d);
  if (it == dates_.end() || *it != d) return std::nullopt;
  return static_cast<std::size_t>(it - dates_.begin());
}

std::size_t PriceTable::date_index(Date d) const {
  if (auto idx = find_date(d)) return *idx;
  throw InputError("unknown date " + format_iso_date(d));
}

std::vector<int> Ranking::rank_of() const {
  std::vector<int> ranks(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) ranks[order[p]] = static_cast<int>(p) + 1;
  return ranks;
}

PriceTable parse_price_csv(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t row = 0;
  for (std::size_t start = 0; start <= text.size();) {
    const std::size_t nl = text.find('\n', start);
    const std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    ++row;
    if (!trim(line).empty()) lines.emplace_back(row, line);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  if (lines.empty()) throw InputError("empty CSV input");

  const auto header = split_fields(lines.front().second);
  const std::size_t header_row = lines.front().first;
  std::string first = std::string(header.front());
  if (first.size() >= 3 && first.compare(0, 3, "\xEF\xBB\xBF") == 0) first.erase(0, 3);
  if (first != "date") throw InputError("header must start with `date`", header_row, 1);
  if (header.size() < 2) throw InputError("header lists no tickers", header_row);
  std::vector<std::string> tickers;
  std::set<std::string> seen;
  for (std::size_t c = 1; c < header.size(); ++c) {
    if (header[c].empty()) throw InputError("empty ticker", header_row, c + 1);
    if (!seen.emplace(header[c]).second) throw InputError("duplicate ticker " + std::string(header[c]), header_row, c + 1);
    tickers.emplace_back(header[c]);
  }

  struct Row {
    Date date;
    std::vector<Price> prices;
  };
  std::vector<Row> rows;
  std::vector<std::pair<Date, std::size_t>> date_rows;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto [line_no, line] = lines[l];
    const auto fields = split_fields(line);
    if (fields.size() != tickers.size() + 1)
      throw InputError("expected " + std::to_string(tickers.size() + 1) + " fields, found " + std::to_string(fields.size()), line_no);
    const auto date = parse_iso_date(fields[0]);
    if (!date) throw InputError("malformed date `" + std::string(fields[0]) + "` (expected YYYY-MM-DD)", line_no, 1);
    Row r{*date, {}};
    for (std::size_t c = 1; c < fields.size(); ++c) {
      if (fields[c].empty()) throw InputError("missing price", line_no, c + 1);
      const auto price = Price::parse(fields[c]);
      if (!price) throw InputError("malformed number `" + std::string(fields[c]) + "`", line_no, c + 1);
      if (price->micros() <= 0) throw InputError("non-positive price " + std::string(fields[c]), line_no, c + 1);
      r.prices.push_back(*price);
    }
    date_rows.emplace_back(*date, line_no);
    rows.push_back(std::move(r));
  }
  std::vector<std::size_t> idx(rows.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return rows[a].date < rows[b].date; });
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (rows[idx[i]].date == rows[idx[i - 1]].date)
      throw InputError("duplicate date " + format_iso_date(rows[idx[i]].date), date_rows[idx[i]].second, 1);

  std::vector<Date> dates;
  std::vector<Price> prices;
  for (std::size_t i : idx) {
    dates.push_back(rows[i].date);
    prices.insert(prices.end(), rows[i].prices.begin(), rows[i].prices.end());
  }
  return PriceTable{std::move(tickers), std::move(dates), std::move(prices)};
}

PriceTable read_price_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_price_csv(buf.str());
}

namespace {

Ranking anchor_ranking(const PriceTable& table, std::size_t d) {
  std::vector<std::size_t> order(table.stock_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Price pa = table.price(d, a), pb = table.price(d, b);
    if (pa != pb) return pa < pb;
    return table.tickers()[a] < table.tickers()[b];
  });
  return Ranking{table.dates()[d], std::move(order)};
}

Ranking next_ranking(const PriceTable& table, const Ranking& previous, std::size_t d) {
  std::vector<std::size_t> order = previous.order;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return table.price(d, a) < table.price(d, b); });
  return Ranking{table.dates()[d], std::move(order)};
}

}  // namespace

std::vector<Ranking> rank_series(const PriceTable& table, Date ref_date, Date end_date) {
  const std::size_t ref = table.date_index(ref_date);
  const std::size_t end = table.date_index(end_date);
  if (end < ref) throw InputError("end date " + format_iso_date(end_date) + " precedes reference date " + format_iso_date(ref_date));
  std::vector<Ranking> series;
  series.push_back(anchor_ranking(table, ref));
  for (std::size_t d = ref + 1; d <= end; ++d) series.push_back(next_ranking(table, series.back(), d));
  return series;
}

Ranking rank_at_date(const PriceTable& table, Date date, std::optional<Date> anchor) {
  const Date start = anchor.value_or(table.dates().front());
  return rank_series(table, start, date).back();
}

Permutation permutation_at(const PriceTable& table, Date ref_date, Date target_date) {
  const auto series = rank_series(table, ref_date, target_date);
  const auto target_rank = series.back().rank_of();
  const auto& ref_order = series.front().order;
  std::vector<int> images(ref_order.size());
  for (std::size_t i = 0; i < ref_order.size(); ++i) images[i] = target_rank[ref_order[i]];
  return Permutation{std::move(images)};
}

std::vector<CrossingEvent> decompose_transition(const Ranking& before, const Ranking& after) {
  const auto target = after.rank_of();
  std::vector<std::size_t> line = before.order;
  std::vector<CrossingEvent> events;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t p = 0; p + 1 < line.size(); ++p) {
      if (target[line[p]] > target[line[p + 1]]) {
        events.push_back({after.date, static_cast<int>(events.size()), static_cast<int>(p) + 1, line[p], line[p + 1]});
        std::swap(line[p], line[p + 1]);
        swapped = true;
      }
    }
  }
  return events;
}

std::vector<CrossingEvent> crossing_stream(const PriceTable& table, Date ref_date, Date end_date) {
  const auto series = rank_series(table, ref_date, end_date);
  std::vector<CrossingEvent> stream;
  for (std::size_t d = 1; d < series.size(); ++d) {
    auto day = decompose_transition(series[d - 1], series[d]);
    stream.insert(stream.end(), day.begin(), day.end());
  }
  return stream;
}

Permutation apply_crossings(const Permutation& start, const std::vector<CrossingEvent>& events) {
  Permutation rank_map = start;
  for (const auto& e : events) rank_map = adjacent_transposition(start.size(), e.position) * rank_map;
  return rank_map;
}

WiringWord wiring_word(const std::vector<CrossingEvent>& events, int n) {
  std::vector<int> letters;
  letters.reserve(events.size());
  for (const auto& e : events) letters.push_back(e.position);
  return WiringWord{n, std::move(letters)};
}

DecoratedPermutation decorate(const Permutation& perm, const PriceTable& table, Date ref_date, Date target_date) {
  const auto series = rank_series(table, ref_date, target_date);
  if (perm != permutation_at(table, ref_date, target_date))
    throw InputError("permutation " + to_string(perm) + " does not match the table between " + format_iso_date(ref_date) + " and " +
                     format_iso_date(target_date));
  const std::size_t ref = table.date_index(ref_date);
  const std::size_t target = table.date_index(target_date);
  const auto& ref_order = series.front().order;
  std::vector<std::optional<Orientation>> colors(static_cast<std::size_t>(perm.size()));
  for (int i : perm.fixed_points()) {
    const std::size_t stock = ref_order[static_cast<std::size_t>(i - 1)];
    colors[static_cast<std::size_t>(i - 1)] =
        table.price(target, stock) >= table.price(ref, stock) ? Orientation::Right : Orientation::Left;
  }
  return DecoratedPermutation{perm, std::move(colors)};
}

}  // namespace stockpoly
