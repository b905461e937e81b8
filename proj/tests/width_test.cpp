#include <doctest.h>

#include <random>

#include "ordcalc/cnf_views.hpp"
#include "ordcalc/errors.hpp"
#include "ordcalc/parser.hpp"
#include "ordcalc/slices.hpp"
#include "ordcalc/testgen.hpp"
#include "ordcalc/width.hpp"

using namespace ordcalc;

namespace {

Ordinal O(const char* text) { return parse_ordinal(text); }
const Ordinal kOne(1ULL);

std::vector<CnfViews> views_of(const std::vector<Ordinal>& factors) {
  std::vector<CnfViews> v;
  for (const auto& f : factors) v.push_back(cnf_views(f));
  return v;
}

}  // namespace

TEST_SUITE_BEGIN("width");

TEST_CASE("indecomposable products") {
  CHECK(width_indecomposable_product({O("1"), O("1")}) == omega());
  CHECK(width_indecomposable_product({omega(), omega()}) == O("w^(w*2)"));
  CHECK(width_indecomposable_product({O("3"), O("2")}) == O("w^4"));
  CHECK(width_indecomposable_product({O("5"), Ordinal(), Ordinal()}) == kOne);
  CHECK(width_indecomposable_product({O("5")}) == kOne);

  // the order of the exponents must not matter
  CHECK(width_indecomposable_product({O("2"), O("3")}) == O("w^4"));
  CHECK(width_indecomposable_product({Ordinal(), O("5"), Ordinal()}) == kOne);

  SUBCASE("two factors agree with the closed form on either side") {
    std::mt19937 rng(11);
    OrdinalGen gen;
    gen.allow_zero = false;
    for (int i = 0; i < 200; ++i) {
      Ordinal a = gen(rng), b = gen(rng);
      Ordinal eta = add(kOne, nat_sum(left_sub(a, kOne), left_sub(b, kOne)));
      CHECK(width_indecomposable_product({a, b}) == omega_pow(eta));
    }
  }
}

TEST_CASE("grounded slice enumeration") {
  SUBCASE("plain count for the three-factor example") {
    auto views = views_of({O("w^w + w"), O("w*3"), O("w^3 + w^2 + 1")});
    auto slices = grounded_plain_slices(views);
    CHECK(slices.size() == 14);  // 2*3*3 - 1*2*2
    for (const auto& s : slices) {
      bool zero = false;
      for (auto i : s.indices) zero = zero || i == 0;
      CHECK(zero);
      CHECK(s.grounded);
    }
  }
  SUBCASE("a single indecomposable factor has exactly one slice") {
    auto slices = grounded_plain_slices(views_of({O("w^w")}));
    REQUIRE(slices.size() == 1);
    CHECK(slices[0].indices == std::vector<std::size_t>{0});
  }
  SUBCASE("meta slices of the two-factor example") {
    auto metas = grounded_meta_slices(views_of({O("w^w + w"), O("w*3")}));
    REQUIRE(metas.size() == 3);
    // order: {1}, {2}, {1,2} over 0-based positions
    CHECK(metas[0].positions == std::vector<std::size_t>{0});
    CHECK(metas[0].coefficient == 1);
    CHECK(metas[1].positions == std::vector<std::size_t>{1});
    CHECK(metas[1].coefficient == 1);
    CHECK(metas[2].positions == std::vector<std::size_t>{0, 1});
    CHECK(metas[2].coefficient == 3);  // 1*3 - 0*2
  }
  SUBCASE("finite factors are rejected") {
    CHECK_THROWS_AS(grounded_plain_slices(views_of({O("w"), O("3")})), NotAllInfiniteError);
    CHECK_THROWS_AS(grounded_developed_slices(views_of({O("5")})), NotAllInfiniteError);
    CHECK_THROWS_AS(grounded_meta_slices(views_of({O("w"), O("1")})), NotAllInfiniteError);
  }
  SUBCASE("budgets are enforced") {
    auto views = views_of({O("w^w + w"), O("w + 1")});
    CHECK_THROWS_AS(grounded_plain_slices(views, 2), ResourceLimitError);
    CHECK_THROWS_AS(grounded_developed_slices(views, 2), ResourceLimitError);
    CHECK_THROWS_AS(grounded_meta_slices(views, 2), ResourceLimitError);
  }
  SUBCASE("plain slice counts match the formula on random factors") {
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> nf(1, 3);
    for (int i = 0; i < 100; ++i) {
      std::vector<Ordinal> factors;
      const int n = nf(rng);
      for (int j = 0; j < n; ++j) factors.push_back(random_infinite_ordinal(rng, 1, 3, 3));
      auto views = views_of(factors);
      std::vector<BigInt> lens;
      for (const auto& v : views) lens.push_back(v.plain_length());
      CHECK(BigInt(grounded_plain_slices(views).size()) == grounded_count(lens));
    }
  }
}

TEST_CASE("products of infinite ordinals") {
  CHECK(width_infinite_product({omega(), omega(), omega()}, Strategy::Plain) == O("w^2"));

  const std::vector<Ordinal> example{O("w^w + w"), O("w*3")};
  CHECK(width_infinite_product(example, Strategy::Plain) == O("w^w*3 + w"));
  CHECK(width_infinite_product(example, Strategy::Developed) == O("w^w*3 + w"));
  CHECK(width_infinite_product(example, Strategy::Meta) == O("w^w*3 + w"));

  const std::vector<Ordinal> succ{O("w^w"), O("w + 1")};
  CHECK(width_infinite_product(succ, Strategy::Plain) == O("w^w + 1"));
  CHECK(width_infinite_product(succ, Strategy::Developed) == O("w^w + 1"));
  CHECK(width_infinite_product(succ, Strategy::Meta) == O("w^w + 1"));
  // matches the successor rule applied to w(w^w x w) = w^w
  CHECK(width_infinite_product({O("w^w"), omega()}, Strategy::Developed) == O("w^w"));

  // two successor factors: grounded slices give w, 1 and 1
  const std::vector<Ordinal> both_succ{O("w + 1"), O("w + 1")};
  for (Strategy s : {Strategy::Plain, Strategy::Developed, Strategy::Meta}) {
    CHECK(width_infinite_product(both_succ, s) == O("w + 2"));
  }

  // large multiplicities stay cheap outside the plain strategy
  const std::vector<Ordinal> wide{O("w*1000000"), omega()};
  CHECK(width_infinite_product(wide, Strategy::Developed) == O("w*1000000"));
  CHECK(width_infinite_product(wide, Strategy::Meta) == O("w*1000000"));
  CHECK_THROWS_AS(width_infinite_product(wide, Strategy::Plain, WidthConfig{Strategy::Plain, 1000}),
                  ResourceLimitError);

  CHECK_THROWS_AS(width_infinite_product({omega(), Ordinal(2)}, Strategy::Plain),
                  NotAllInfiniteError);

  SUBCASE("the three strategies agree on random products") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> nf(1, 4);
    for (int i = 0; i < 60; ++i) {
      std::vector<Ordinal> factors;
      const int n = nf(rng);
      for (int j = 0; j < n; ++j) factors.push_back(random_infinite_ordinal(rng, 2, 2, 4));
      Ordinal p = width_infinite_product(factors, Strategy::Plain);
      Ordinal d = width_infinite_product(factors, Strategy::Developed);
      Ordinal m = width_infinite_product(factors, Strategy::Meta);
      CHECK(p == d);
      CHECK(d == m);
    }
  }
}

TEST_CASE("products of finite chains") {
  CHECK(width_finite_product({2, 2, 2}) == Ordinal(3));
  for (unsigned long long k = 1; k <= 7; ++k) {
    CHECK(width_finite_product({BigInt(k)}) == kOne);
  }
  // (1 + x + x^2)^2 = 1 + 2x + 3x^2 + 2x^3 + x^4, center 3
  CHECK(width_finite_product({3, 3}) == Ordinal(3));
  CHECK(width_finite_product({}) == kOne);
  CHECK_THROWS_AS(width_finite_product({BigInt(0)}), std::invalid_argument);
  CHECK_THROWS_AS(width_finite_product({BigInt(10), BigInt(10)}, 5), ResourceLimitError);
}

TEST_CASE("general product dispatch") {
  CHECK(width_product({omega(), Ordinal(2)}) == Ordinal(2));
  CHECK(width_product({O("w^w"), O("w^w"), Ordinal(5)}) == O("w^(w*2)*5"));
  for (const char* alpha : {"w^w + 3", "w^2", "5", "1"}) {
    CHECK(width_product({O(alpha), kOne, kOne}) == kOne);
  }
  CHECK(width_product({O("w"), Ordinal(), O("w^w")}) == Ordinal());
  CHECK(width_product({}) == kOne);

  // the successor rule grounds w(w x 2) through w(w x 1) = 1
  CHECK(width_product({omega(), kOne}) == kOne);

  SUBCASE("invariant under permutations and singleton factors") {
    std::mt19937 rng(14);
    OrdinalGen gen;
    gen.allow_zero = false;
    std::uniform_int_distribution<int> nf(1, 4);
    for (int i = 0; i < 100; ++i) {
      std::vector<Ordinal> factors;
      const int n = nf(rng);
      for (int j = 0; j < n; ++j) factors.push_back(gen(rng));
      Ordinal w = width_product(factors);
      std::vector<Ordinal> shuffled = factors;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      CHECK(width_product(shuffled) == w);
      std::vector<Ordinal> padded = factors;
      padded.insert(padded.begin() + (i % (padded.size() + 1)), kOne);
      CHECK(width_product(padded) == w);
    }
  }
}

TEST_CASE("width-equals-otype predicate") {
  CHECK(width_equals_otype({O("w^w"), O("w^w")}));
  CHECK_FALSE(width_equals_otype({omega(), omega()}));
  CHECK_FALSE(width_equals_otype({O("w^w + w"), O("w^w")}));
  CHECK_THROWS_AS(width_equals_otype({Ordinal(2), Ordinal(3)}), NoInfiniteFactorError);
  CHECK_THROWS_AS(width_equals_otype({omega(), Ordinal()}), std::invalid_argument);

  // the values behind the negative example
  CHECK(width_product({O("w^w + w"), O("w^w")}) == O("w^(w*2) + w^w"));
  CHECK(nat_prod(O("w^w + w"), O("w^w")) == O("w^(w*2) + w^(w + 1)"));

  // mixed finite factors leave the answer unchanged
  CHECK(width_equals_otype({O("w^w"), O("w^w"), Ordinal(4)}));
  CHECK_FALSE(width_equals_otype({omega(), omega(), Ordinal(4)}));
}

TEST_SUITE_END();
