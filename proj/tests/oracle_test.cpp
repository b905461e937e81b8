#include <doctest.h>

#include <random>

#include "ordcalc/errors.hpp"
#include "ordcalc/poset.hpp"
#include "ordcalc/width.hpp"

using namespace ordcalc;

namespace {

// Random induced subposet of a small grid, for oracle-vs-oracle checks.
FinitePoset random_subposet(std::mt19937& rng, std::size_t max_size) {
  std::uniform_int_distribution<int> side(2, 4), dims(2, 3);
  const int n = dims(rng);
  std::vector<int> ks(n);
  for (int& k : ks) k = side(rng);
  FinitePoset grid = grid_poset(ks);
  std::vector<std::vector<int>> chosen;
  std::vector<std::size_t> idx(grid.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  std::uniform_int_distribution<std::size_t> want(1, max_size);
  const std::size_t take = std::min(want(rng), grid.size());
  for (std::size_t i = 0; i < take; ++i) chosen.push_back(grid.elements()[idx[i]]);
  return FinitePoset(std::move(chosen));
}

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("grid construction") {
  FinitePoset diamond = grid_poset({2, 2});
  CHECK(diamond.size() == 4);
  CHECK(max_antichain(diamond) == 2);

  CHECK(grid_poset({1, 1, 1}).size() == 1);
  CHECK(grid_poset({3, 4}).size() == 12);

  CHECK_THROWS_AS(grid_poset({100, 100, 100}), ResourceLimitError);
  CHECK_THROWS_AS(grid_poset({0, 2}), std::invalid_argument);
}

TEST_CASE("maximum antichain") {
  CHECK(max_antichain(grid_poset({2, 2, 2})) == 3);
  for (int k = 1; k <= 7; ++k) CHECK(max_antichain(grid_poset({k})) == 1);
  CHECK(max_antichain(grid_poset({3, 3})) == 3);
  CHECK(max_antichain_exhaustive(grid_poset({3, 3})) == 3);

  SUBCASE("matching and exhaustive search agree on small posets") {
    std::mt19937 rng(31);
    for (int i = 0; i < 60; ++i) {
      FinitePoset p = random_subposet(rng, 16);
      CHECK(max_antichain(p) == max_antichain_exhaustive(p));
    }
  }
  SUBCASE("invariant under permutations of the sides") {
    CHECK(max_antichain(grid_poset({2, 3, 4})) == max_antichain(grid_poset({4, 2, 3})));
    CHECK(max_antichain(grid_poset({5, 2})) == max_antichain(grid_poset({2, 5})));
  }
}

TEST_CASE("longest chain") {
  CHECK(longest_chain(grid_poset({3, 4})) == 6);
  for (int k = 1; k <= 7; ++k) CHECK(longest_chain(grid_poset({k})) == static_cast<std::size_t>(k));
  CHECK(longest_chain(grid_poset({2, 2})) == 3);

  std::mt19937 rng(32);
  std::uniform_int_distribution<int> side(1, 5), dims(1, 4);
  for (int i = 0; i < 40; ++i) {
    const int n = dims(rng);
    std::vector<int> ks(n);
    std::size_t expected = 1;
    for (int& k : ks) {
      k = side(rng);
      expected += k - 1;
    }
    CHECK(longest_chain(grid_poset(ks)) == expected);
  }
}

TEST_CASE("longest bad sequence") {
  CHECK(longest_bad_sequence(grid_poset({2, 2})) == 4);
  for (int k = 1; k <= 12; ++k)
    CHECK(longest_bad_sequence(grid_poset({k})) == static_cast<std::size_t>(k));
  CHECK(longest_bad_sequence(grid_poset({2, 3})) == 6);
  CHECK_THROWS_AS(longest_bad_sequence(grid_poset({4, 4})), ResourceLimitError);

  SUBCASE("always the whole poset") {
    std::mt19937 rng(33);
    for (int i = 0; i < 40; ++i) {
      FinitePoset p = random_subposet(rng, 12);
      CHECK(longest_bad_sequence(p) == p.size());
    }
  }
}

TEST_CASE("oracle-vs-formula reports") {
  SUBCASE("2 x 2 x 2") {
    OracleReport r = check_against_formulas({2, 2, 2});
    CHECK(r.ok);
    CHECK(r.antichain_oracle == 3);
    CHECK(r.antichain_formula == 3);
    CHECK(r.chain_oracle == 4);
    CHECK(r.chain_formula == 4);
    REQUIRE(r.bad_oracle.has_value());
    CHECK(*r.bad_oracle == 8);
    CHECK(*r.bad_formula == 8);
  }
  SUBCASE("singleton") {
    OracleReport r = check_against_formulas({1});
    CHECK(r.ok);
    CHECK(r.antichain_oracle == 1);
    CHECK(r.chain_oracle == 1);
    REQUIRE(r.bad_oracle.has_value());
    CHECK(*r.bad_oracle == 1);
  }
  SUBCASE("5 x 5") {
    OracleReport r = check_against_formulas({5, 5});
    CHECK(r.ok);
    CHECK(r.antichain_oracle == 5);
    CHECK(r.chain_oracle == 9);
    REQUIRE(r.bad_oracle.has_value());
    CHECK(*r.bad_oracle == 25);
    CHECK(*r.bad_formula == 25);
  }
  SUBCASE("report JSON shape") {
    nlohmann::json j = check_against_formulas({2, 2}).to_json();
    CHECK(j["input"] == nlohmann::json({2, 2}));
    CHECK(j["antichain"]["oracle"] == 2);
    CHECK(j["antichain"]["formula"] == "2");
    CHECK(j["chain"]["oracle"] == 3);
    CHECK(j["bad"]["oracle"] == 4);
    CHECK(j["ok"] == true);
  }
}

TEST_SUITE_END();
