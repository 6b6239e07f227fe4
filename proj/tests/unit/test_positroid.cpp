#include "doctest.h"
#include "oracles.hpp"
#include "stockpoly/necklace.hpp"
#include "stockpoly/positroid.hpp"

using namespace stockpoly;

namespace {

DecoratedPermutation right(std::vector<int> images) { return DecoratedPermutation::uniform(Permutation{std::move(images)}); }

}  // namespace

TEST_CASE("gale_geq examples") {
  CHECK(gale_geq(Subset{2, 4}, Subset{1, 3}, 1, 4));
  CHECK_FALSE(gale_geq(Subset{1, 2}, Subset{1, 3}, 1, 4));
  CHECK(gale_geq(Subset{1, 2}, Subset{3, 4}, 3, 4));  // order 3<4<1<2
  CHECK(gale_geq(Subset{}, Subset{}, 1, 3));
  CHECK_THROWS_AS(gale_geq(Subset{1}, Subset{1, 2}, 1, 3), std::invalid_argument);
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k)
      for_each_k_subset(n, k, [&](Subset h) {
        for_each_k_subset(n, k, [&](Subset i) {
          for (int s = 1; s <= n; ++s) CHECK(gale_geq(h, i, s, n) == oracle::gale_by_order(h, i, s, n));
        });
      });
}

TEST_CASE("positroid of {2,4,1,3}") {
  const auto m = positroid_of(right({2, 4, 1, 3}));
  CHECK(m.k() == 2);
  CHECK(m.bases() == std::vector<Subset>{Subset{1, 3}, Subset{1, 4}, Subset{2, 3}, Subset{2, 4}, Subset{3, 4}});
  CHECK(m.is_basis(Subset{2, 3}));
  CHECK_FALSE(m.is_basis(Subset{1, 2}));
  CHECK_FALSE(verify_exchange_axiom(m).has_value());
  CHECK(matroid_rank(m, Subset{1, 2}) == 1);
  CHECK(matroid_rank(m, Subset{1, 2, 3, 4}) == 2);
  CHECK(dimension_terms(right({2, 4, 1, 3})) == std::vector<int>{1, 2, 2, 2});
  CHECK(cell_dimension(right({2, 4, 1, 3})) == 3);
  CHECK(connected_components(m) == Partition{{1, 2, 3, 4}});
}

TEST_CASE("small positroids") {
  SUBCASE("top cell of Gr(2,4)") {
    const auto m = positroid_of(right({3, 4, 1, 2}));
    CHECK(m.bases().size() == 6);
    CHECK(cell_dimension(right({3, 4, 1, 2})) == 4);
  }
  SUBCASE("all RIGHT identity has only the empty basis") {
    const auto m = positroid_of(right({1, 2, 3}));
    CHECK(m.bases() == std::vector<Subset>{Subset{}});
    CHECK(cell_dimension(right({1, 2, 3})) == 0);
    CHECK(connected_components(m) == Partition{{1}, {2}, {3}});
  }
  SUBCASE("{2,1,4,3} splits into two blocks") {
    const auto m = positroid_of(right({2, 1, 4, 3}));
    CHECK(connected_components(m) == Partition{{1, 2}, {3, 4}});
    CHECK(is_noncrossing(connected_components(m)));
  }
  SUBCASE("non-exchange basis set is reported") {
    const Positroid bad(4, 2, {Subset{1, 2}, Subset{3, 4}});
    const auto cx = verify_exchange_axiom(bad);
    REQUIRE(cx.has_value());
    CHECK(cx->first == Subset{1, 2});
    CHECK(cx->second == Subset{3, 4});
    CHECK(cx->element == 1);
  }
  SUBCASE("constructor checks sizes") {
    CHECK_THROWS_AS(Positroid(4, 2, {Subset{1}}), std::invalid_argument);
    CHECK_THROWS_AS(Positroid(4, 2, {}), std::invalid_argument);
    CHECK_THROWS_AS(Positroid(3, 1, {Subset{4}}), std::invalid_argument);
  }
}

TEST_CASE("is_noncrossing examples") {
  CHECK(is_noncrossing({{1, 4}, {2, 3}}));
  CHECK_FALSE(is_noncrossing({{1, 3}, {2, 4}}));
  CHECK(is_noncrossing({{1}, {2}, {3}}));
  CHECK_FALSE(is_noncrossing({{1, 3, 5}, {2, 6}, {4}}));
}

TEST_CASE("property: matroid invariants for n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& dp : all_decorated_permutations(n)) {
      const auto nk = necklace_from_decorated(dp);
      const auto m = positroid_from_necklace(nk);
      CHECK_FALSE(verify_exchange_axiom(m).has_value());
      for (int i = 1; i <= n; ++i) {
        const auto g = gale_minimum(m, i);
        REQUIRE(g.has_value());
        CHECK(*g == nk.term(i));
      }
      for (int a = 1; a <= n; ++a)
        for (int b = a; b <= a + n - 1; ++b) {
          const Subset s = Subset::cyclic_interval(a, b, n);
          CHECK(cyclic_interval_rank(nk, a, b) == oracle::rank_by_subsets(m.bases(), s));
          CHECK(matroid_rank(m, s) == oracle::rank_by_subsets(m.bases(), s));
        }
      const int d = cell_dimension(dp);
      CHECK(d >= 0);
      CHECK(d <= nk.k * (n - nk.k));
      CHECK(d == oracle::dimension_by_affine_length(affine_lift(dp)));
      const auto parts = connected_components(m);
      CHECK(parts == oracle::components_by_circuits(n, m.bases()));
      CHECK(is_noncrossing(parts));
    }
}
