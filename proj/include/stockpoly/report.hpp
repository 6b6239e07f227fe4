#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "stockpoly/ingest.hpp"
#include "stockpoly/necklace.hpp"
#include "stockpoly/permcore.hpp"
#include "stockpoly/polytope.hpp"
#include "stockpoly/positroid.hpp"

namespace stockpoly {

inline constexpr int kReportSchemaVersion = 1;

struct PolytopeSummary {
  std::size_t vertex_count = 0;
  int affine_dimension = 0;
  std::optional<std::vector<Facet>> facets;  ///< present when requested
};

/// Everything derived from a price table between two dates.
struct AnalysisReport {
  Date ref_date;
  Date target_date;
  std::vector<std::string> tickers;       ///< in reference-rank order
  DecoratedPermutation state;
  std::vector<CrossingEvent> crossings;
  GrassmannNecklace necklace;
  BoundedAffinePermutation lift;
  std::vector<int> rank_terms;            ///< r[i, f(i)]
  Positroid positroid;
  int cell_dimension = 0;
  PolytopeSummary polytope;
  Partition components;
};

AnalysisReport analyze(const PriceTable& table, Date ref_date, Date target_date, bool with_facets = false);

/// Key-sorted JSON document (schema_version 1).
nlohmann::json to_json(const AnalysisReport& report, const PriceTable& table);
/// to_json(...).dump(2) plus a trailing newline; byte-stable.
std::string canonical_json(const AnalysisReport& report, const PriceTable& table);
std::string to_text(const AnalysisReport& report, const PriceTable& table);

/// Re-derives the combinatorial tower from the reported permutation and decorations
/// and lists every field that disagrees. Empty means consistent. A structurally malformed
/// document (bad permutation, wrong types) throws std::invalid_argument or nlohmann::json::exception.
std::vector<std::string> check_report(const nlohmann::json& report);

/// Chain of market states, one step per crossing event after the reference state.
struct MarketChainStep {
  std::optional<CrossingEvent> event;  ///< empty for the reference state
  DecoratedPermutation state;
  int dimension = 0;
};

std::vector<MarketChainStep> market_chain(const PriceTable& table, Date ref_date, Date end_date);
std::string chain_to_text(const std::vector<MarketChainStep>& chain, const PriceTable& table, Date ref_date);

}  // namespace stockpoly
