#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stockpoly/permcore.hpp"

namespace stockpoly {

using Date = std::chrono::year_month_day;

/// Parses a strict ISO-8601 calendar date (YYYY-MM-DD).
std::optional<Date> parse_iso_date(std::string_view text);
std::string format_iso_date(Date d);

/// Closing price as an exact fixed-point decimal in millionths of a currency unit.
class Price {
 public:
  static constexpr int kScaleDigits = 6;
  static constexpr std::int64_t kScale = 1'000'000;

  constexpr Price() = default;
  static constexpr Price from_micros(std::int64_t micros) { return Price{micros}; }

  /// Accepts `123`, `123.4`, `123.456789`; sign allowed so callers can reject non-positive values.
  static std::optional<Price> parse(std::string_view text);

  constexpr std::int64_t micros() const noexcept { return micros_; }
  /// Shortest decimal rendering with at least two fractional digits ("75.10").
  std::string to_string() const;

  friend constexpr auto operator<=>(Price, Price) = default;

 private:
  constexpr explicit Price(std::int64_t micros) : micros_{micros} {}
  std::int64_t micros_ = 0;
};

/// Input validation failure with a 1-based source location (0 when not applicable).
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, std::size_t row = 0, std::size_t column = 0);
  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

/// Dates x tickers matrix of closing prices; rows sorted by strictly increasing date.
class PriceTable {
 public:
  PriceTable(std::vector<std::string> tickers, std::vector<Date> dates, std::vector<Price> prices);

  std::size_t stock_count() const noexcept { return tickers_.size(); }
  std::size_t date_count() const noexcept { return dates_.size(); }
  const std::vector<std::string>& tickers() const noexcept { return tickers_; }
  const std::vector<Date>& dates() const noexcept { return dates_; }

  Price price(std::size_t date_index, std::size_t stock) const { return prices_.at(date_index * tickers_.size() + stock); }

  std::optional<std::size_t> find_date(Date d) const;
  /// Throws InputError when the date is absent.
  std::size_t date_index(Date d) const;

 private:
  std::vector<std::string> tickers_;
  std::vector<Date> dates_;
  std::vector<Price> prices_;
};

/// Stocks ordered by ascending price; order[p] is the stock holding rank p+1.
struct Ranking {
  Date date;
  std::vector<std::size_t> order;

  /// rank_of()[s] = 1-based rank of stock s.
  std::vector<int> rank_of() const;
};

/// Two stocks at adjacent ranks `position` and `position+1` swap order.
struct CrossingEvent {
  Date date;
  int seq = 0;
  int position = 0;
  std::size_t lower_stock = 0;  ///< held rank `position` before the swap
  std::size_t upper_stock = 0;  ///< held rank `position+1` before the swap

  friend bool operator==(const CrossingEvent&, const CrossingEvent&) = default;
};

PriceTable parse_price_csv(std::string_view text);
PriceTable read_price_csv(const std::string& path);

/// Ranking at `date`. Ties are resolved alphabetically at `anchor` (default: first
/// date of the table) and by the previous date's order on every later date.
Ranking rank_at_date(const PriceTable& table, Date date, std::optional<Date> anchor = std::nullopt);

/// Rankings for every table date in [ref_date, end_date], anchored at ref_date.
std::vector<Ranking> rank_series(const PriceTable& table, Date ref_date, Date end_date);

/// pi(i) = target-date rank of the stock whose reference-date rank is i.
Permutation permutation_at(const PriceTable& table, Date ref_date, Date target_date);

/// Daily transitions decomposed into adjacent transpositions by left-to-right bubble sort.
std::vector<CrossingEvent> crossing_stream(const PriceTable& table, Date ref_date, Date end_date);

/// Bubble-sort decomposition of one transition; events carry `date` and seq 0,1,...
std::vector<CrossingEvent> decompose_transition(const Ranking& before, const Ranking& after);

/// Rank map after applying events, in order, to `start` (event at p swaps ranks p and p+1).
Permutation apply_crossings(const Permutation& start, const std::vector<CrossingEvent>& events);

/// Time-ordered positions of the events as a wiring word on n wires.
WiringWord wiring_word(const std::vector<CrossingEvent>& events, int n);

/// Colors fixed points RIGHT when the price at target_date is >= the price at ref_date.
DecoratedPermutation decorate(const Permutation& perm, const PriceTable& table, Date ref_date, Date target_date);

}  // namespace stockpoly
