#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stockpoly/exact.hpp"
#include "stockpoly/permcore.hpp"
#include "stockpoly/positroid.hpp"
#include "stockpoly/subset.hpp"

namespace stockpoly {

/// sum_{i in [a..b]} x_i <= bound over the cyclic interval [a..b].
struct IntervalInequality {
  int a = 0;
  int b = 0;
  int bound = 0;

  friend bool operator==(const IntervalInequality&, const IntervalInequality&) = default;
};

/// Convex hull of basis indicator vectors, with the cyclic-interval H-description
/// (plus 0 <= x_i <= 1 and sum x_i = k, which are implicit).
struct PositroidPolytope {
  int n = 0;
  int k = 0;
  std::vector<Subset> vertices;
  std::vector<IntervalInequality> inequalities;

  exact::IntVector indicator(std::size_t vertex) const;
};

PositroidPolytope polytope_from_positroid(const Positroid& m);

/// Dimension of the affine hull of the vertex set.
int polytope_dimension(const PositroidPolytope& p);

/// normal . x <= offset, tight exactly on `vertices` (indices into PositroidPolytope::vertices).
struct Facet {
  exact::IntVector normal;
  std::int64_t offset = 0;
  std::vector<std::size_t> vertices;
};

inline constexpr int kMaxFacetGround = 8;

/// Exact facet list of the vertex hull, sorted by incident vertex set.
/// Throws std::invalid_argument when n > kMaxFacetGround.
std::vector<Facet> enumerate_facets(const PositroidPolytope& p);

/// Vertices of {sum x = k, 0 <= x <= 1, interval cuts} found by brute force over basic
/// feasible points; each vertex is an exact rational point, list sorted and deduplicated.
std::vector<std::vector<exact::Rational>> inequality_system_vertices(const PositroidPolytope& p);

struct ChainStep {
  std::string label;
  WiringWord prefix;
  DecoratedPermutation state;
  int dimension = 0;
};

struct CellChain {
  std::vector<ChainStep> steps;
};

/// Orientation for fixed point `point` at chain step `step` (0 = empty prefix).
using DecorationRule = std::function<Orientation(std::size_t step, int point)>;

DecorationRule all_right();

/// One step per prefix length 0..|word|; labels default to "t=<len>".
CellChain decomposition_chain(const WiringWord& word, const DecorationRule& rule = all_right(),
                              const std::vector<std::string>& labels = {});

struct RemovalFace {
  WiringWord word;
  DecoratedPermutation state;
  int dimension = 0;
  bool contained = false;  ///< new bases are a subset of the original bases
};

RemovalFace face_of_removal(const WiringWord& word, std::size_t index, Orientation new_fixed = Orientation::Right);

}  // namespace stockpoly
