#include "stockpoly/positroid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stockpoly {
namespace {

std::vector<int> cyclic_sorted(Subset s, int shift, int n) {
  auto e = s.elements();
  std::sort(e.begin(), e.end(), [&](int x, int y) { return (x - shift + n) % n < (y - shift + n) % n; });
  return e;
}

}  // namespace

bool gale_geq(Subset h, Subset i, int shift, int n) {
  if (h.size() != i.size()) throw std::invalid_argument("gale_geq: subsets of different size");
  const auto hs = cyclic_sorted(h, shift, n);
  const auto is = cyclic_sorted(i, shift, n);
  for (std::size_t t = 0; t < hs.size(); ++t)
    if ((hs[t] - shift + n) % n < (is[t] - shift + n) % n) return false;
  return true;
}

Positroid::Positroid(int n, int k, std::vector<Subset> bases) : n_{n}, k_{k}, bases_{std::move(bases)} {
  if (bases_.empty()) throw std::invalid_argument("a matroid needs at least one basis");
  for (Subset b : bases_)
    if (b.size() != k_ || !b.is_subset_of(Subset::full(n_))) throw std::invalid_argument("basis " + to_string(b) + " is not a k-subset of {1..n}");
  std::sort(bases_.begin(), bases_.end(), lex_less);
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
}

bool Positroid::is_basis(Subset s) const {
  return std::binary_search(bases_.begin(), bases_.end(), s, lex_less);
}

Positroid positroid_from_necklace(const GrassmannNecklace& nk) {
  if (auto v = validate_necklace(nk))
    throw std::invalid_argument("invalid Grassmann necklace at index " + std::to_string(v->index) + ": " + v->reason);
  std::vector<Subset> bases;
  for_each_k_subset(nk.n, nk.k, [&](Subset h) {
    for (int i = 1; i <= nk.n; ++i)
      if (!gale_geq(h, nk.term(i), i, nk.n)) return;
    bases.push_back(h);
  });
  return Positroid{nk.n, nk.k, std::move(bases)};
}

Positroid positroid_of(const DecoratedPermutation& dp) { return positroid_from_necklace(necklace_from_decorated(dp)); }

std::optional<ExchangeCounterexample> verify_exchange_axiom(const Positroid& m) {
  for (Subset first : m.bases()) {
    for (Subset second : m.bases()) {
      const Subset out = second - first;
      for (int i : (first - second).elements()) {
        const Subset base = first.without(i);
        bool found = false;
        for (int j : out.elements()) {
          if (m.is_basis(base.with(j))) {
            found = true;
            break;
          }
        }
        if (!found) return ExchangeCounterexample{first, second, i};
      }
    }
  }
  return std::nullopt;
}

int matroid_rank(const Positroid& m, Subset s) {
  int best = 0;
  for (Subset b : m.bases()) best = std::max(best, (b & s).size());
  return best;
}

std::optional<Subset> gale_minimum(const Positroid& m, int shift) {
  for (Subset candidate : m.bases()) {
    const bool below_all = std::all_of(m.bases().begin(), m.bases().end(),
                                       [&](Subset other) { return gale_geq(other, candidate, shift, m.n()); });
    if (below_all) return candidate;
  }
  return std::nullopt;
}

std::vector<int> dimension_terms(const DecoratedPermutation& dp) {
  const GrassmannNecklace nk = necklace_from_decorated(dp);
  const BoundedAffinePermutation f = affine_lift(dp);
  std::vector<int> terms;
  terms.reserve(static_cast<std::size_t>(dp.size()));
  for (int i = 1; i <= dp.size(); ++i) terms.push_back(cyclic_interval_rank(nk, i, f(i)));
  return terms;
}

int cell_dimension(const DecoratedPermutation& dp) {
  const auto terms = dimension_terms(dp);
  const int k = anti_exceedance_count(dp);
  return std::accumulate(terms.begin(), terms.end(), 0) - k * k;
}

Partition connected_components(const Positroid& m) {
  const int n = m.n();
  std::vector<int> parent(static_cast<std::size_t>(n + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  // Fundamental circuits of one basis generate the component relation:
  // e outside B and b in B share a circuit iff B - b + e is a basis.
  const Subset basis = m.bases().front();
  const Subset outside = Subset::full(n) - basis;
  for (int e : outside.elements())
    for (int b : basis.elements())
      if (m.is_basis(basis.without(b).with(e))) parent[static_cast<std::size_t>(find(e))] = find(b);

  Partition blocks;
  std::vector<int> block_of(static_cast<std::size_t>(n + 1), -1);
  for (int x = 1; x <= n; ++x) {
    const int root = find(x);
    if (block_of[static_cast<std::size_t>(root)] < 0) {
      block_of[static_cast<std::size_t>(root)] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(block_of[static_cast<std::size_t>(root)])].push_back(x);
  }
  return blocks;
}

bool is_noncrossing(const Partition& blocks) {
  for (std::size_t p = 0; p < blocks.size(); ++p)
    for (std::size_t q = 0; q < blocks.size(); ++q) {
      if (p == q) continue;
      for (int a : blocks[p])
        for (int a2 : blocks[p])
          for (int b : blocks[q])
            for (int b2 : blocks[q])
              if (a < b && b < a2 && a2 < b2) return false;
    }
  return true;
}

}  // namespace stockpoly
