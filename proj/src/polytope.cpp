#include "stockpoly/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

namespace stockpoly {

using exact::checked_add;
using exact::checked_mul;
using exact::checked_sub;
using exact::IntVector;

exact::IntVector PositroidPolytope::indicator(std::size_t vertex) const {
  IntVector v(static_cast<std::size_t>(n), 0);
  for (int e : vertices.at(vertex).elements()) v[static_cast<std::size_t>(e - 1)] = 1;
  return v;
}

PositroidPolytope polytope_from_positroid(const Positroid& m) {
  PositroidPolytope p{m.n(), m.k(), m.bases(), {}};
  for (int a = 1; a <= m.n(); ++a)
    for (int b = a; b <= a + m.n() - 2; ++b)
      p.inequalities.push_back({a, b, matroid_rank(m, Subset::cyclic_interval(a, b, m.n()))});
  return p;
}

namespace {

std::vector<IntVector> difference_rows(const PositroidPolytope& p) {
  std::vector<IntVector> rows;
  const IntVector base = p.indicator(0);
  for (std::size_t v = 1; v < p.vertices.size(); ++v) {
    IntVector d = p.indicator(v);
    for (std::size_t j = 0; j < d.size(); ++j) d[j] -= base[j];
    rows.push_back(std::move(d));
  }
  return rows;
}

// Coordinates on which the projection of the affine hull stays injective.
std::vector<std::size_t> hull_coordinates(const std::vector<IntVector>& diffs, std::size_t n) {
  std::vector<std::size_t> picked;
  exact::EchelonBasis columns(diffs.size());
  for (std::size_t j = 0; j < n; ++j) {
    IntVector col(diffs.size());
    for (std::size_t r = 0; r < diffs.size(); ++r) col[r] = diffs[r][j];
    if (columns.insert(std::move(col))) picked.push_back(j);
  }
  return picked;
}

struct Ray {
  IntVector y;                    // (offset, normal...) in projected coordinates
  boost::dynamic_bitset<> zeros;  // processed constraint rows tight on y
};

}  // namespace

int polytope_dimension(const PositroidPolytope& p) {
  if (p.vertices.empty()) throw std::invalid_argument("polytope has no vertices");
  return static_cast<int>(exact::rank(difference_rows(p)));
}

std::vector<Facet> enumerate_facets(const PositroidPolytope& p) {
  if (p.n > kMaxFacetGround)
    throw std::invalid_argument("facet enumeration supports n <= " + std::to_string(kMaxFacetGround));
  if (p.vertices.empty()) throw std::invalid_argument("polytope has no vertices");
  const auto diffs = difference_rows(p);
  const auto coords = hull_coordinates(diffs, static_cast<std::size_t>(p.n));
  const std::size_t d = coords.size();
  if (d == 0) return {};

  // Row i of the cone: y . (1, -q_i) >= 0 means normal . q_i <= offset.
  const std::size_t m = p.vertices.size();
  std::vector<IntVector> rows(m, IntVector(d + 1));
  for (std::size_t i = 0; i < m; ++i) {
    const IntVector x = p.indicator(i);
    rows[i][0] = 1;
    for (std::size_t t = 0; t < d; ++t) rows[i][t + 1] = -x[coords[t]];
  }

  // Seed with a simplicial cone over d+1 independent rows.
  std::vector<std::size_t> seed;
  exact::EchelonBasis seed_basis(d + 1);
  for (std::size_t i = 0; i < m && seed.size() < d + 1; ++i)
    if (seed_basis.insert(rows[i])) seed.push_back(i);

  std::vector<IntVector> seed_rows;
  for (std::size_t i : seed) seed_rows.push_back(rows[i]);
  std::vector<Ray> rays;
  for (std::size_t j = 0; j <= d; ++j) {
    IntVector e(d + 1, 0);
    e[j] = 1;
    const auto sol = exact::solve(seed_rows, e);
    boost::multiprecision::cpp_int denom_lcm = 1;
    for (const auto& v : sol) denom_lcm = boost::multiprecision::lcm(denom_lcm, boost::multiprecision::denominator(v));
    Ray ray{IntVector(d + 1), boost::dynamic_bitset<>(m)};
    for (std::size_t t = 0; t <= d; ++t) {
      const exact::Rational scaled = sol[t] * denom_lcm;
      ray.y[t] = static_cast<std::int64_t>(boost::multiprecision::numerator(scaled));
    }
    exact::normalize(ray.y);
    for (std::size_t s = 0; s <= d; ++s)
      if (s != j) ray.zeros.set(seed[s]);
    rays.push_back(std::move(ray));
  }

  std::vector<bool> in_seed(m, false);
  for (std::size_t i : seed) in_seed[i] = true;

  for (std::size_t i = 0; i < m; ++i) {
    if (in_seed[i]) continue;
    std::vector<std::int64_t> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = exact::dot(rays[r].y, rows[i]);
      if (value[r] > 0) pos.push_back(r);
      else if (value[r] < 0) neg.push_back(r);
    }
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (value[r] < 0) continue;
      Ray kept = rays[r];
      if (value[r] == 0) kept.zeros.set(i);
      next.push_back(std::move(kept));
    }
    for (std::size_t a : pos) {
      for (std::size_t b : neg) {
        const auto common = rays[a].zeros & rays[b].zeros;
        if (common.count() + 2 < d + 1) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != a && r != b && common.is_subset_of(rays[r].zeros)) adjacent = false;
        if (!adjacent) continue;
        Ray fresh{IntVector(d + 1), common};
        for (std::size_t t = 0; t <= d; ++t)
          fresh.y[t] = checked_sub(checked_mul(value[a], rays[b].y[t]), checked_mul(value[b], rays[a].y[t]));
        exact::normalize(fresh.y);
        fresh.zeros.set(i);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  std::vector<Facet> facets;
  for (const Ray& ray : rays) {
    Facet f;
    f.normal.assign(static_cast<std::size_t>(p.n), 0);
    for (std::size_t t = 0; t < d; ++t) f.normal[coords[t]] = ray.y[t + 1];
    f.offset = ray.y[0];
    for (std::size_t i = 0; i < m; ++i)
      if (exact::dot(ray.y, rows[i]) == 0) f.vertices.push_back(i);
    facets.push_back(std::move(f));
  }
  std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });
  return facets;
}

namespace {

struct Constraint {
  IntVector row;
  std::int64_t rhs;
};

// Augmented rows [coefficients | rhs] in echelon form; pivots only among coefficients.
struct TightSystem {
  std::vector<IntVector> rows;
  std::vector<std::size_t> pivots;

  bool add(IntVector v, std::size_t n) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::size_t col = pivots[r];
      if (v[col] == 0) continue;
      const std::int64_t a = rows[r][col];
      const std::int64_t c = v[col];
      for (std::size_t j = 0; j <= n; ++j) v[j] = checked_sub(checked_mul(v[j], a), checked_mul(c, rows[r][j]));
      exact::normalize(v);
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] != 0) {
        rows.push_back(std::move(v));
        pivots.push_back(j);
        return true;
      }
    }
    return false;
  }
};

// Unique solution of a full-rank tight system as integer numerators over a common denominator.
std::pair<IntVector, std::int64_t> solve_tight(TightSystem sys, std::size_t n) {
  auto& rows = sys.rows;
  for (std::size_t r = rows.size(); r-- > 0;) {
    const std::size_t col = sys.pivots[r];
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][col] == 0) continue;
      const std::int64_t a = rows[r][col];
      const std::int64_t c = rows[o][col];
      for (std::size_t j = 0; j <= n; ++j) rows[o][j] = checked_sub(checked_mul(rows[o][j], a), checked_mul(c, rows[r][j]));
      exact::normalize(rows[o]);
    }
  }
  std::int64_t denom = 1;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::int64_t c = std::abs(rows[r][sys.pivots[r]]);
    denom = checked_mul(denom / std::gcd(denom, c), c);
  }
  IntVector numer(n, 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::int64_t c = rows[r][sys.pivots[r]];
    numer[sys.pivots[r]] = checked_mul(rows[r][n], denom / c);
  }
  return {numer, denom};
}

}  // namespace

std::vector<std::vector<exact::Rational>> inequality_system_vertices(const PositroidPolytope& p) {
  const auto n = static_cast<std::size_t>(p.n);
  if (n == 0) return {{}};
  // All constraints in the form row . x <= rhs; the level equation is always tight.
  std::vector<Constraint> cons;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector lo(n, 0), hi(n, 0);
    lo[i] = -1;
    hi[i] = 1;
    cons.push_back({lo, 0});
    cons.push_back({hi, 1});
  }
  for (const auto& q : p.inequalities) {
    IntVector row(n, 0);
    for (int e : Subset::cyclic_interval(q.a, q.b, p.n).elements()) row[static_cast<std::size_t>(e - 1)] = 1;
    cons.push_back({row, q.bound});
  }
  IntVector ones(n, 1);
  cons.push_back({ones, p.k});
  IntVector neg_ones(n, -1);
  cons.push_back({neg_ones, -p.k});
  const std::vector<Constraint> choices(cons.begin(), cons.end() - 2);

  TightSystem sys;
  IntVector level(n + 1, 1);
  level[n] = p.k;
  sys.add(std::move(level), n);
  std::set<std::pair<IntVector, std::int64_t>> found;
  // Tight rows come from `choices`; feasibility is checked against every constraint.
  struct Search {
    const std::vector<Constraint>& choices;
    const std::vector<Constraint>& all;
    std::size_t n;
    std::set<std::pair<IntVector, std::int64_t>>& found;
    void run(std::size_t start, const TightSystem& sys) {
      if (sys.rows.size() == n) {
        auto [numer, denom] = solve_tight(sys, n);
        for (const auto& c : all)
          if (exact::dot(c.row, numer) > checked_mul(c.rhs, denom)) return;
        std::int64_t g = denom;
        for (std::int64_t x : numer) g = std::gcd(g, x);
        for (std::int64_t& x : numer) x /= g;
        found.emplace(std::move(numer), denom / g);
        return;
      }
      for (std::size_t c = start; c < choices.size(); ++c) {
        if (choices.size() - c < n - sys.rows.size()) break;
        TightSystem next = sys;
        IntVector aug = choices[c].row;
        aug.push_back(choices[c].rhs);
        if (next.add(std::move(aug), n)) run(c + 1, next);
      }
    }
  };
  Search{choices, cons, n, found}.run(0, sys);

  std::vector<std::vector<exact::Rational>> out;
  for (const auto& [numer, denom] : found) {
    std::vector<exact::Rational> v;
    for (std::int64_t x : numer) v.emplace_back(exact::Rational(x) / denom);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

DecorationRule all_right() {
  return [](std::size_t, int) { return Orientation::Right; };
}

CellChain decomposition_chain(const WiringWord& word, const DecorationRule& rule, const std::vector<std::string>& labels) {
  if (!labels.empty() && labels.size() != word.length() + 1)
    throw std::invalid_argument("decomposition_chain needs one label per prefix");
  CellChain chain;
  for (std::size_t t = 0; t <= word.length(); ++t) {
    WiringWord prefix = word.prefix(t);
    const Permutation perm = word_to_permutation(prefix);
    std::vector<std::optional<Orientation>> colors(static_cast<std::size_t>(word.n));
    for (int i : perm.fixed_points()) colors[static_cast<std::size_t>(i - 1)] = rule(t, i);
    DecoratedPermutation state{perm, std::move(colors)};
    const int dim = cell_dimension(state);
    chain.steps.push_back({labels.empty() ? "t=" + std::to_string(t) : labels[t], std::move(prefix), std::move(state), dim});
  }
  return chain;
}

RemovalFace face_of_removal(const WiringWord& word, std::size_t index, Orientation new_fixed) {
  const auto original = DecoratedPermutation::uniform(word_to_permutation(word), Orientation::Right);
  WiringWord reduced = remove_letter(word, index);
  const Permutation perm = word_to_permutation(reduced);
  std::vector<std::optional<Orientation>> colors(static_cast<std::size_t>(word.n));
  for (int i : perm.fixed_points())
    colors[static_cast<std::size_t>(i - 1)] = original.perm().is_fixed(i) ? original.color(i) : new_fixed;
  DecoratedPermutation state{perm, std::move(colors)};

  const Positroid before = positroid_of(original);
  const Positroid after = positroid_of(state);
  const bool contained = after.k() == before.k() &&
                         std::all_of(after.bases().begin(), after.bases().end(), [&](Subset b) { return before.is_basis(b); });
  const int dim = cell_dimension(state);
  return {std::move(reduced), std::move(state), dim, contained};
}

}  // namespace stockpoly
