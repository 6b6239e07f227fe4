#include "doctest.h"
#include "stockpoly/necklace.hpp"

using namespace stockpoly;

namespace {

GrassmannNecklace fixture_necklace() { return {4, 2, {Subset{1, 3}, Subset{2, 3}, Subset{3, 4}, Subset{1, 4}}}; }

}  // namespace

TEST_CASE("necklace_from_decorated examples") {
  using O = Orientation;
  CHECK(necklace_from_decorated(DecoratedPermutation::uniform(Permutation{{2, 4, 1, 3}})) == fixture_necklace());
  CHECK(to_string(fixture_necklace()) == "({1,3},{2,3},{3,4},{1,4})");

  const auto right = necklace_from_decorated(DecoratedPermutation::uniform(Permutation::identity(3)));
  CHECK(right.k == 0);
  for (const auto& t : right.terms) CHECK(t.empty());

  const auto left = necklace_from_decorated(DecoratedPermutation::uniform(Permutation::identity(3), O::Left));
  CHECK(left.k == 3);
  for (const auto& t : left.terms) CHECK(t == Subset{1, 2, 3});

  const DecoratedPermutation mixed{Permutation{{1, 3, 2, 4}}, {O::Right, std::nullopt, std::nullopt, O::Left}};
  const GrassmannNecklace expected{4, 2, {Subset{2, 4}, Subset{2, 4}, Subset{3, 4}, Subset{2, 4}}};
  CHECK(necklace_from_decorated(mixed) == expected);
  CHECK(decorated_from_necklace(expected) == mixed);
}

TEST_CASE("validate_necklace reports the first failing index") {
  CHECK_FALSE(validate_necklace(fixture_necklace()).has_value());

  auto broken = fixture_necklace();
  broken.terms[1] = Subset{2, 4};  // I_1 \ {1} = {3} not contained in {2,4}
  const auto v = validate_necklace(broken);
  REQUIRE(v.has_value());
  CHECK(v->index == 1);
  CHECK_THROWS_AS(decorated_from_necklace(broken), std::invalid_argument);

  auto wrong_size = fixture_necklace();
  wrong_size.terms[2] = Subset{3};
  REQUIRE(validate_necklace(wrong_size).has_value());
  CHECK(validate_necklace(wrong_size)->index == 3);

  auto out_of_range = fixture_necklace();
  out_of_range.terms[0] = Subset{1, 5};
  CHECK(validate_necklace(out_of_range).has_value());

  // i not in I_i forces I_{i+1} = I_i
  const GrassmannNecklace stuck{3, 1, {Subset{2}, Subset{3}, Subset{3}}};
  const auto s = validate_necklace(stuck);
  REQUIRE(s.has_value());
  CHECK(s->index == 1);
}

TEST_CASE("cyclic_interval_rank examples") {
  const auto nk = fixture_necklace();
  CHECK(cyclic_interval_rank(nk, 1, 2) == 1);
  CHECK(cyclic_interval_rank(nk, 2, 4) == 2);
  CHECK(cyclic_interval_rank(nk, 3, 5) == 2);
  CHECK(cyclic_interval_rank(nk, 4, 7) == 2);
  CHECK(cyclic_interval_rank(nk, 1, 1) == 1);
  CHECK(cyclic_interval_rank(nk, 2, 2) == 1);
  CHECK_THROWS_AS(cyclic_interval_rank(nk, 0, 2), std::out_of_range);
  CHECK_THROWS_AS(cyclic_interval_rank(nk, 2, 7), std::out_of_range);
}

TEST_CASE("round trip over all decorated permutations, n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& dp : all_decorated_permutations(n)) {
      const auto nk = necklace_from_decorated(dp);
      CHECK_FALSE(validate_necklace(nk).has_value());
      CHECK(nk.k == anti_exceedance_count(dp));
      CHECK(decorated_from_necklace(nk) == dp);
      // terms are k-subsets and I_i determines I_{i+1} up to one swap
      for (int i = 1; i <= n; ++i) CHECK((nk.term(i) - nk.term(i + 1)).size() <= 1);
    }
}
