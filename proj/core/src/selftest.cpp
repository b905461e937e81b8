#include "ordcalc/selftest.hpp"

#include <random>
#include <sstream>

#include "ordcalc/errors.hpp"
#include "ordcalc/invariants.hpp"
#include "ordcalc/poset.hpp"
#include "ordcalc/testgen.hpp"
#include "ordcalc/width.hpp"

namespace ordcalc {

namespace {

const Ordinal kOne(1ULL);

struct Failure {
  std::ostringstream msg;
  int count = 0;

  void note(const std::string& what) {
    if (count == 0) msg << what;
    ++count;
  }
};

CriterionResult finish(std::string id, std::string name, const Failure& f, int cases) {
  CriterionResult r;
  r.id = std::move(id);
  r.name = std::move(name);
  r.pass = f.count == 0;
  if (r.pass) {
    r.detail = std::to_string(cases) + " checks";
  } else {
    r.detail = std::to_string(f.count) + " failures, first: " + f.msg.str();
  }
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

CriterionResult pinned_values() {
  Failure f;
  int cases = 0;
  for (unsigned n = 1; n <= 6; ++n) {
    std::vector<Ordinal> factors(n, omega());
    Ordinal expected = omega_pow(Ordinal(static_cast<unsigned long long>(n - 1)));
    ++cases;
    if (!(width_product(factors) == expected))
      f.note("w of " + std::to_string(n) + " copies of w");
    std::vector<WqoExprPtr> leaves(n, WqoExpr::ordinal(omega()));
    InvariantResult via_expr = width(WqoExpr::product(leaves));
    ++cases;
    if (!via_expr.is_known() || !(via_expr.value() == expected))
      f.note("expression width of " + std::to_string(n) + " copies of w");
  }
  const Ordinal omega_omega = omega_pow(omega());
  for (unsigned n = 2; n <= 5; ++n) {
    std::vector<Ordinal> factors(n, omega_omega);
    Ordinal expected = omega_pow(mul(omega(), Ordinal(static_cast<unsigned long long>(n))));
    ++cases;
    if (!(width_product(factors) == expected))
      f.note("w of " + std::to_string(n) + " copies of w^w");
  }
  {
    InvariantResult h = height(WqoExpr::product(
        {WqoExpr::ordinal(omega()), WqoExpr::ordinal(omega())}));
    ++cases;
    if (!h.is_known() || !(h.value() == omega())) f.note("h(w x w)");
  }
  {
    InvariantResult o = otype(WqoExpr::star(WqoExpr::gamma(1)));
    ++cases;
    if (!o.is_known() || !(o.value() == omega())) f.note("o(star(G1))");
  }
  return finish("pinned-values", "pinned regression values for small products", f, cases);
}

CriterionResult two_factor_closed_form() {
  Failure f;
  std::mt19937 rng(20250811);
  OrdinalGen gen;
  gen.max_depth = 3;
  gen.allow_zero = false;
  int cases = 0;
  for (int i = 0; i < 200; ++i) {
    Ordinal a = gen(rng), b = gen(rng);
    Ordinal lhs = width_product({omega_pow(a), omega_pow(b)});
    Ordinal eta = add(kOne, nat_sum(left_sub(a, kOne), left_sub(b, kOne)));
    ++cases;
    if (!(lhs == omega_pow(eta)))
      f.note("pair (" + a.to_string() + ", " + b.to_string() + ")");
  }
  return finish("two-factor-closed-form", "two-factor indecomposable closed form agreement", f,
                cases);
}

Ordinal random_strategy_factor(std::mt19937& rng) {
  std::uniform_int_distribution<int> nexp(1, 3), coeff(1, 4);
  for (;;) {
    OrdinalGen egen;
    egen.max_depth = 1;
    egen.max_terms = 2;
    const int r = nexp(rng);
    std::vector<Ordinal::Term> terms;
    for (int j = 0; j < r; ++j) {
      terms.push_back({egen(rng), BigInt(coeff(rng))});
    }
    Ordinal o = Ordinal::from_terms(std::move(terms));
    if (o.is_infinite()) return o;
  }
}

CriterionResult three_strategies() {
  Failure f;
  std::mt19937 rng(20250812);
  std::uniform_int_distribution<int> nfac(2, 4);
  int cases = 0;
  for (int i = 0; i < 100; ++i) {
    std::vector<Ordinal> factors;
    const int n = nfac(rng);
    for (int j = 0; j < n; ++j) factors.push_back(random_strategy_factor(rng));
    Ordinal plain = width_infinite_product(factors, Strategy::Plain);
    Ordinal developed = width_infinite_product(factors, Strategy::Developed);
    Ordinal meta = width_infinite_product(factors, Strategy::Meta);
    ++cases;
    if (!(plain == developed) || !(developed == meta)) {
      std::string desc;
      for (const auto& x : factors) desc += x.to_string() + "; ";
      f.note("factors " + desc);
    }
  }
  return finish("three-strategies", "plain, developed and meta slice formulas agree", f, cases);
}

CriterionResult successor_rule() {
  Failure f;
  std::mt19937 rng(20250813);
  OrdinalGen gen;
  gen.allow_zero = false;
  int cases = 0;
  for (int i = 0; i < 100; ++i) {
    Ordinal alpha = random_infinite_ordinal(rng);
    Ordinal beta = gen(rng);
    Ordinal stepped = width_product({alpha, add(beta, kOne)});
    Ordinal base = width_product({alpha, beta});
    ++cases;
    if (!(stepped == add(base, kOne)))
      f.note("alpha=" + alpha.to_string() + " beta=" + beta.to_string());
  }
  return finish("successor-rule", "width steps by one under a successor factor", f, cases);
}

CriterionResult finite_grids() {
  Failure f;
  int cases = 0;
  for (unsigned n = 1; n <= 20; ++n) {
    std::vector<BigInt> ks(n, BigInt(2));
    ++cases;
    if (!(width_finite_product(ks).finite_value() == binomial(n, n / 2)))
      f.note("2^n grid at n=" + std::to_string(n));
  }
  for (unsigned n = 1; n <= 15; ++n) {
    std::vector<BigInt> ks(n, BigInt(3));
    BigInt expected = 0;
    for (unsigned i = 0; i <= n / 2; ++i) expected += binomial(n, i) * binomial(n - i, i);
    ++cases;
    if (!(width_finite_product(ks).finite_value() == expected))
      f.note("3^n grid at n=" + std::to_string(n));
  }
  return finish("finite-grids", "finite grid widths match the binomial forms", f, cases);
}

CriterionResult oracle_equivalence() {
  Failure f;
  int cases = 0;
  // every shape with up to 4 sides of size up to 5
  std::vector<std::vector<int>> shapes;
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> ks(n, 1);
    while (true) {
      shapes.push_back(ks);
      int i = 0;
      for (; i < n; ++i) {
        if (++ks[i] <= 5) break;
        ks[i] = 1;
      }
      if (i == n) break;
    }
  }
  // plus 50 random larger shapes within the oracle budget
  std::mt19937 rng(20250814);
  std::uniform_int_distribution<int> nd(2, 6), kd(1, 8);
  int added = 0;
  while (added < 50) {
    const int n = nd(rng);
    std::vector<int> ks(n);
    long prod = 1;
    for (int& k : ks) {
      k = kd(rng);
      prod *= k;
    }
    if (prod <= 625 || prod > 2000) continue;
    shapes.push_back(ks);
    ++added;
  }
  for (const auto& ks : shapes) {
    OracleReport r = check_against_formulas(ks, kDefaultPosetBudget, 12);
    ++cases;
    if (!r.ok) {
      std::string desc;
      for (int k : ks) desc += std::to_string(k) + " ";
      f.note("grid " + desc);
    }
  }
  return finish("oracle-equivalence", "brute-force grid oracles match the closed forms", f,
                cases);
}

CriterionResult global_sanity() {
  Failure f;
  std::mt19937 rng(20250815);
  int cases = 0;

  // width <= otype on a corpus of expressions with concrete width
  int concrete = 0, attempts = 0;
  while (concrete < 500 && attempts < 20000) {
    ++attempts;
    WqoExprPtr e = random_expr(rng, 6);
    InvariantResult w = width(e);
    if (!w.is_known()) continue;
    ++concrete;
    InvariantResult o = otype(e);
    ++cases;
    if (compare(w.value(), o.value()) > 0) f.note("width above otype");
  }
  if (concrete < 500) f.note("could not build 500 concrete-width expressions");

  // strict monotonicity of the indecomposable-product width in each exponent
  OrdinalGen gen;
  gen.allow_zero = false;
  std::uniform_int_distribution<int> nd(2, 4);
  for (int i = 0; i < 200; ++i) {
    const int n = nd(rng);
    std::vector<Ordinal> exps;
    for (int j = 0; j < n; ++j) exps.push_back(gen(rng));
    std::uniform_int_distribution<int> pick(0, n - 1);
    const int at = pick(rng);
    std::vector<Ordinal> bumped = exps;
    Ordinal delta = gen(rng);
    bumped[at] = add(bumped[at], delta);
    ++cases;
    if (!(compare(width_indecomposable_product(exps),
                  width_indecomposable_product(bumped)) < 0)) {
      f.note("monotonicity at case " + std::to_string(i));
    }
  }

  // the equality predicate against the direct width/otype comparison
  std::uniform_int_distribution<int> ninf(1, 3), nfin(0, 2), fin(1, 5);
  for (int i = 0; i < 200; ++i) {
    std::vector<Ordinal> factors;
    const int a = ninf(rng), b = nfin(rng);
    for (int j = 0; j < a; ++j) factors.push_back(random_infinite_ordinal(rng));
    for (int j = 0; j < b; ++j)
      factors.push_back(Ordinal(static_cast<unsigned long long>(fin(rng))));
    Ordinal w = width_product(factors);
    Ordinal o = kOne;
    for (const auto& x : factors) o = nat_prod(o, x);
    ++cases;
    if (width_equals_otype(factors) != (w == o)) f.note("predicate case " + std::to_string(i));
  }

  return finish("global-sanity",
                "width bounded by order type, monotone widths, equality predicate", f, cases);
}

CriterionResult arithmetic_laws() {
  Failure f;
  std::mt19937 rng(20250816);
  OrdinalGen gen;
  int cases = 0;
  for (int i = 0; i < 1000; ++i) {
    Ordinal a = gen(rng), b = gen(rng), c = gen(rng);
    ++cases;
    if (!(nat_sum(a, b) == nat_sum(b, a))) f.note("nat_sum commutativity");
    if (!(nat_prod(a, b) == nat_prod(b, a))) f.note("nat_prod commutativity");
    if (!(nat_sum(nat_sum(a, b), c) == nat_sum(a, nat_sum(b, c))))
      f.note("nat_sum associativity");
    if (!(nat_prod(nat_prod(a, b), c) == nat_prod(a, nat_prod(b, c))))
      f.note("nat_prod associativity");
    if (!(nat_prod(a, nat_sum(b, c)) == nat_sum(nat_prod(a, b), nat_prod(a, c))))
      f.note("distributivity");
    Ordinal lo = compare(a, b) <= 0 ? a : b;
    Ordinal hi = compare(a, b) <= 0 ? b : a;
    if (!(add(lo, left_sub(hi, lo)) == hi)) f.note("left_sub inversion");
  }
  std::uniform_int_distribution<unsigned long long> small(0, 60);
  for (int i = 0; i < 1000; ++i) {
    unsigned long long m = small(rng), n = small(rng);
    Ordinal a(m), b(n);
    ++cases;
    if (!(add(a, b) == Ordinal(m + n)) || !(nat_sum(a, b) == Ordinal(m + n)))
      f.note("finite addition agreement");
    if (!(mul(a, b) == Ordinal(m * n)) || !(nat_prod(a, b) == Ordinal(m * n)))
      f.note("finite multiplication agreement");
    if (m >= 1 && n >= 1 && !(sup_plus_one(a, b) == Ordinal(m + n - 1)))
      f.note("finite sup_plus_one");
  }
  return finish("arithmetic-laws", "natural operation laws and finite agreement", f, cases);
}

}  // namespace

nlohmann::json SelfTestReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : criteria) {
    arr.push_back({{"id", c.id},
                   {"name", c.name},
                   {"status", c.pass ? "pass" : "fail"},
                   {"detail", c.detail}});
  }
  return nlohmann::json{{"criteria", arr}, {"ok", ok}};
}

SelfTestReport run_selftest() {
  SelfTestReport report;
  report.criteria.push_back(pinned_values());
  report.criteria.push_back(two_factor_closed_form());
  report.criteria.push_back(three_strategies());
  report.criteria.push_back(successor_rule());
  report.criteria.push_back(finite_grids());
  report.criteria.push_back(oracle_equivalence());
  report.criteria.push_back(global_sanity());
  report.criteria.push_back(arithmetic_laws());
  report.ok = true;
  for (const auto& c : report.criteria) report.ok = report.ok && c.pass;
  return report;
}

}  // namespace ordcalc
