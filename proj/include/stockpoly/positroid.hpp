#pragma once

#include <optional>
#include <vector>

#include "stockpoly/necklace.hpp"
#include "stockpoly/permcore.hpp"
#include "stockpoly/subset.hpp"

namespace stockpoly {

/// Sort both sets in the cyclic order shift < shift+1 < ... < shift-1 and compare componentwise.
/// Throws std::invalid_argument on a size mismatch.
bool gale_geq(Subset h, Subset i, int shift, int n);

/// Rank-k basis system on {1..n}. Bases are kept in lexicographic order.
class Positroid {
 public:
  Positroid() = default;
  /// Checks sizes only; the exchange axiom is checked by verify_exchange_axiom.
  Positroid(int n, int k, std::vector<Subset> bases);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  const std::vector<Subset>& bases() const noexcept { return bases_; }
  bool is_basis(Subset s) const;

  friend bool operator==(const Positroid&, const Positroid&) = default;

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<Subset> bases_;
};

/// {H : gale_geq(H, I_i, i) for all i}; throws std::invalid_argument on an invalid necklace.
Positroid positroid_from_necklace(const GrassmannNecklace& nk);
Positroid positroid_of(const DecoratedPermutation& dp);

struct ExchangeCounterexample {
  Subset first;
  Subset second;
  int element = 0;  ///< element of first \ second with no valid exchange
};

std::optional<ExchangeCounterexample> verify_exchange_axiom(const Positroid& m);

/// max |S & B| over bases B.
int matroid_rank(const Positroid& m, Subset s);

/// The basis that every basis dominates in the <=_shift Gale order, if one exists.
std::optional<Subset> gale_minimum(const Positroid& m, int shift);

/// Terms r[i, f(i)] of the dimension sum, in order i = 1..n.
std::vector<int> dimension_terms(const DecoratedPermutation& dp);

/// sum_i r[i, f(i)] - k^2.
int cell_dimension(const DecoratedPermutation& dp);

using Partition = std::vector<std::vector<int>>;

/// Matroid connected components, blocks sorted by least element.
Partition connected_components(const Positroid& m);

/// No blocks A != B with a < b < a' < b', a,a' in A and b,b' in B.
bool is_noncrossing(const Partition& blocks);

}  // namespace stockpoly
