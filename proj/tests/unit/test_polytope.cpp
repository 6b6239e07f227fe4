#include "doctest.h"
#include "oracles.hpp"
#include "stockpoly/necklace.hpp"
#include "stockpoly/polytope.hpp"

using namespace stockpoly;
using exact::IntVector;
using exact::Rational;

namespace {

DecoratedPermutation right(std::vector<int> images) { return DecoratedPermutation::uniform(Permutation{std::move(images)}); }

std::vector<IntVector> points_of(const PositroidPolytope& p) {
  std::vector<IntVector> pts;
  for (std::size_t v = 0; v < p.vertices.size(); ++v) pts.push_back(p.indicator(v));
  return pts;
}

std::set<std::vector<std::size_t>> incidences(const std::vector<Facet>& facets) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& f : facets) out.insert(f.vertices);
  return out;
}

}  // namespace

TEST_CASE("exact helpers") {
  CHECK_THROWS_AS(exact::checked_mul(INT64_MAX, 2), std::overflow_error);
  CHECK_THROWS_AS(exact::checked_add(INT64_MAX, 1), std::overflow_error);
  CHECK_THROWS_AS(exact::checked_sub(INT64_MIN, 1), std::overflow_error);
  CHECK(exact::checked_mul(-3, 7) == -21);
  IntVector v{4, -6, 0};
  exact::normalize(v);
  CHECK(v == IntVector{2, -3, 0});
  CHECK(exact::rank({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}) == 2);
  CHECK(exact::rank({}) == 0);
  const auto x = exact::solve({{2, 1}, {1, 3}}, {3, 5});
  REQUIRE(x.size() == 2);
  CHECK(x[0] == Rational(4, 5));
  CHECK(x[1] == Rational(7, 5));
  CHECK(exact::solve({{1, 2}, {2, 4}}, {1, 2}).empty());
  exact::EchelonBasis basis(3);
  CHECK(basis.insert({1, 0, 1}));
  CHECK_FALSE(basis.insert({2, 0, 2}));
  CHECK(basis.spans({3, 0, 3}));
  CHECK_FALSE(basis.spans({0, 1, 0}));
}

TEST_CASE("{2,4,1,3} polytope: 5 vertices, dimension 3, 4 triangles and a quadrilateral") {
  const auto p = polytope_from_positroid(positroid_of(right({2, 4, 1, 3})));
  CHECK(p.vertices.size() == 5);
  CHECK(p.indicator(0) == IntVector{1, 0, 1, 0});
  CHECK(polytope_dimension(p) == 3);
  const auto facets = enumerate_facets(p);
  REQUIRE(facets.size() == 5);
  int triangles = 0, quads = 0;
  for (const auto& f : facets) {
    if (f.vertices.size() == 3) ++triangles;
    if (f.vertices.size() == 4) ++quads;
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
      const auto value = exact::dot(f.normal, p.indicator(v));
      const bool tight = std::find(f.vertices.begin(), f.vertices.end(), v) != f.vertices.end();
      CHECK(value <= f.offset);
      CHECK((value == f.offset) == tight);
    }
  }
  CHECK(triangles == 4);
  CHECK(quads == 1);
  CHECK(inequality_system_vertices(p).size() == 5);
  // x1 + x2 <= 1 is among the cuts
  CHECK(std::find(p.inequalities.begin(), p.inequalities.end(), IntervalInequality{1, 2, 1}) != p.inequalities.end());
}

TEST_CASE("hypersimplex and degenerate cases") {
  const auto top = polytope_from_positroid(positroid_of(right({3, 4, 1, 2})));
  CHECK(top.vertices.size() == 6);
  CHECK(polytope_dimension(top) == 3);
  CHECK(enumerate_facets(top).size() == 8);

  const auto point = polytope_from_positroid(positroid_of(right({1, 2, 3})));
  CHECK(point.vertices.size() == 1);
  CHECK(polytope_dimension(point) == 0);
  CHECK(enumerate_facets(point).empty());

  const auto segment = polytope_from_positroid(positroid_of(right({2, 1})));
  CHECK(polytope_dimension(segment) == 1);
  CHECK(enumerate_facets(segment).size() == 2);

  const auto too_big = polytope_from_positroid(positroid_of(right({2, 3, 4, 5, 6, 7, 8, 9, 1})));
  CHECK_THROWS_AS(enumerate_facets(too_big), std::invalid_argument);
}

TEST_CASE("property: facets and H-description over n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& dp : all_decorated_permutations(n)) {
      const auto p = polytope_from_positroid(positroid_of(dp));
      const auto pts = points_of(p);
      CHECK(static_cast<int>(exact::rank([&] {
              std::vector<IntVector> diffs;
              for (const auto& q : pts) {
                IntVector d(q.size());
                for (std::size_t j = 0; j < q.size(); ++j) d[j] = q[j] - pts[0][j];
                diffs.push_back(d);
              }
              return diffs;
            }())) == polytope_dimension(p));
      CHECK(polytope_dimension(p) == n - static_cast<int>(connected_components(positroid_of(dp)).size()));
      CHECK(incidences(enumerate_facets(p)) == oracle::facets_by_hyperplanes(pts));

      // each facet is the tight set of some interval cut or box bound
      std::set<std::vector<std::size_t>> from_system;
      auto tight_set = [&](auto pred) {
        std::vector<std::size_t> t;
        for (std::size_t v = 0; v < pts.size(); ++v)
          if (pred(p.vertices[v])) t.push_back(v);
        return t;
      };
      for (const auto& ineq : p.inequalities)
        from_system.insert(tight_set([&](Subset b) { return (b & Subset::cyclic_interval(ineq.a, ineq.b, n)).size() == ineq.bound; }));
      for (int i = 1; i <= n; ++i) {
        from_system.insert(tight_set([&](Subset b) { return b.contains(i); }));
        from_system.insert(tight_set([&](Subset b) { return !b.contains(i); }));
      }
      for (const auto& f : enumerate_facets(p)) CHECK(from_system.count(f.vertices) == 1);

      const auto hv = inequality_system_vertices(p);
      std::vector<std::vector<Rational>> expected;
      for (const auto& q : pts) expected.emplace_back(q.begin(), q.end());
      std::sort(expected.begin(), expected.end());
      CHECK(hv == expected);
    }
}

TEST_CASE("decomposition chain of (s2,s3,s1)") {
  const auto chain = decomposition_chain(WiringWord(4, {2, 3, 1}));
  REQUIRE(chain.steps.size() == 4);
  std::vector<int> dims;
  for (const auto& s : chain.steps) dims.push_back(s.dimension);
  CHECK(dims == std::vector<int>{0, 1, 2, 3});
  CHECK(chain.steps[0].label == "t=0");
  CHECK(chain.steps[3].state == right({2, 4, 1, 3}));

  const auto labelled = decomposition_chain(WiringWord(2, {1}), all_right(), {"a", "b"});
  CHECK(labelled.steps[1].label == "b");
  CHECK_THROWS(decomposition_chain(WiringWord(2, {1}), all_right(), {"a"}));
}

TEST_CASE("face_of_removal") {
  const WiringWord w(4, {2, 3, 1});
  const auto face = face_of_removal(w, 0);
  CHECK(face.word == WiringWord(4, {3, 1}));
  CHECK(face.dimension == 2);
  CHECK_THROWS_AS(face_of_removal(w, 3), std::out_of_range);

  const auto last = face_of_removal(WiringWord(4, {1, 3, 2}), 2);
  CHECK(last.state == right({2, 1, 4, 3}));
  CHECK(last.dimension == 2);
  CHECK(last.contained);

  // uniform decorations change k here, so the flag is honestly false
  const auto single = face_of_removal(WiringWord(2, {1}), 0);
  CHECK(single.state.perm() == Permutation::identity(2));
  CHECK(single.dimension == 0);
  CHECK_FALSE(single.contained);
  CHECK_FALSE(face_of_removal(WiringWord(2, {1}), 0, Orientation::Left).contained);

  const auto repeated = face_of_removal(WiringWord(3, {1, 1, 2}), 0);
  CHECK(repeated.dimension == cell_dimension(repeated.state));

  // contained flag agrees with a direct basis comparison
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> letters;
    std::function<void()> rec = [&] {
      const WiringWord word(n, letters);
      for (std::size_t i = 0; i < letters.size(); ++i)
        for (auto o : {Orientation::Right, Orientation::Left}) {
          const auto f = face_of_removal(word, i, o);
          const auto outer = positroid_of(DecoratedPermutation::uniform(word_to_permutation(word)));
          const auto inner = positroid_of(f.state);
          bool subset = inner.k() == outer.k();
          for (Subset b : inner.bases()) subset = subset && outer.is_basis(b);
          CHECK(f.contained == subset);
          CHECK(f.dimension == cell_dimension(f.state));
        }
      if (letters.size() == 3) return;
      for (int p = 1; p < n; ++p) {
        letters.push_back(p);
        rec();
        letters.pop_back();
      }
    };
    rec();
  }
}
