#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stockpoly/permcore.hpp"
#include "stockpoly/subset.hpp"

namespace stockpoly {

/// Cyclic sequence I_1..I_n of k-subsets of {1..n}.
struct GrassmannNecklace {
  int n = 0;
  int k = 0;
  std::vector<Subset> terms;

  /// I_i, cyclic in i.
  Subset term(int i) const { return terms.at(static_cast<std::size_t>(((i - 1) % n + n) % n)); }

  friend bool operator==(const GrassmannNecklace&, const GrassmannNecklace&) = default;
};

/// "({1,3},{2,3},{3,4},{1,4})"
std::string to_string(const GrassmannNecklace& nk);

struct NecklaceViolation {
  int index = 0;  ///< first failing cyclic index i (1-based)
  std::string reason;
};

/// I_i = values j whose preimage lies after j in the order i < i+1 < ... < i-1, plus LEFT fixed points.
GrassmannNecklace necklace_from_decorated(const DecoratedPermutation& dp);

std::optional<NecklaceViolation> validate_necklace(const GrassmannNecklace& nk);

/// Inverse of necklace_from_decorated; throws std::invalid_argument on an invalid necklace.
DecoratedPermutation decorated_from_necklace(const GrassmannNecklace& nk);

/// r[a,b] = |I_a & [a..b]| for the cyclic interval [a..b], 1 <= a <= n, a <= b <= a+n.
int cyclic_interval_rank(const GrassmannNecklace& nk, int a, int b);

}  // namespace stockpoly
