#include "stockpoly/necklace.hpp"

#include <stdexcept>

namespace stockpoly {
namespace {

// Position of x in the cyclic order start < start+1 < ... < start-1.
int cyclic_pos(int x, int start, int n) { return ((x - start) % n + n) % n; }

}  // namespace

std::string to_string(const GrassmannNecklace& nk) {
  std::string out = "(";
  for (std::size_t i = 0; i < nk.terms.size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(nk.terms[i]);
  }
  return out + ")";
}

GrassmannNecklace necklace_from_decorated(const DecoratedPermutation& dp) {
  const int n = dp.size();
  const Permutation inv = dp.perm().inverse();
  GrassmannNecklace nk{n, anti_exceedance_count(dp), {}};
  nk.terms.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Subset term;
    for (int j = 1; j <= n; ++j) {
      const int pre = inv(j);
      if (pre == j) {
        if (dp.color(j) == Orientation::Left) term.insert(j);
      } else if (cyclic_pos(pre, i, n) > cyclic_pos(j, i, n)) {
        term.insert(j);
      }
    }
    nk.terms.push_back(term);
  }
  return nk;
}

std::optional<NecklaceViolation> validate_necklace(const GrassmannNecklace& nk) {
  const int n = nk.n;
  if (n < 0 || static_cast<int>(nk.terms.size()) != n)
    return NecklaceViolation{0, "expected n terms"};
  if (n > Subset::kMaxGround) return NecklaceViolation{0, "ground set too large"};
  const Subset ground = Subset::full(n);
  for (int i = 1; i <= n; ++i) {
    const Subset t = nk.term(i);
    if (!t.is_subset_of(ground)) return NecklaceViolation{i, "term has elements outside {1..n}"};
    if (t.size() != nk.k) return NecklaceViolation{i, "term size differs from k"};
  }
  for (int i = 1; i <= n; ++i) {
    const Subset cur = nk.term(i);
    const Subset next = nk.term(i + 1);
    if (cur.contains(i)) {
      const Subset rest = cur.without(i);
      // next must be rest + {j} for a single j (j may equal i)
      if (!rest.is_subset_of(next) || (next - rest).size() != 1)
        return NecklaceViolation{i, "i in I_i but I_{i+1} is not I_i \\ {i} + {j}"};
    } else if (next != cur) {
      return NecklaceViolation{i, "i not in I_i but I_{i+1} != I_i"};
    }
  }
  return std::nullopt;
}

DecoratedPermutation decorated_from_necklace(const GrassmannNecklace& nk) {
  if (auto v = validate_necklace(nk))
    throw std::invalid_argument("invalid Grassmann necklace at index " + std::to_string(v->index) + ": " + v->reason);
  const int n = nk.n;
  std::vector<int> images(static_cast<std::size_t>(n));
  std::vector<std::optional<Orientation>> colors(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const Subset cur = nk.term(i);
    const auto idx = static_cast<std::size_t>(i - 1);
    if (!cur.contains(i)) {
      images[idx] = i;
      colors[idx] = Orientation::Right;
      continue;
    }
    const Subset added = nk.term(i + 1) - cur.without(i);
    const int j = added.elements().front();
    images[idx] = j;
    if (j == i) colors[idx] = Orientation::Left;
  }
  return DecoratedPermutation{Permutation{std::move(images)}, std::move(colors)};
}

int cyclic_interval_rank(const GrassmannNecklace& nk, int a, int b) {
  if (a < 1 || a > nk.n || b < a || b > a + nk.n)
    throw std::out_of_range("cyclic interval [" + std::to_string(a) + "," + std::to_string(b) + "] out of range");
  return (nk.term(a) & Subset::cyclic_interval(a, b, nk.n)).size();
}

}  // namespace stockpoly
