#include "ordcalc/testgen.hpp"

#include <algorithm>

namespace ordcalc {

namespace {

int uniform(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Ordinal random_ordinal_at(std::mt19937& rng, int depth, int max_terms, unsigned max_coeff,
                          bool allow_zero) {
  if (depth <= 0) {
    const int lo = allow_zero ? 0 : 1;
    return Ordinal(static_cast<unsigned long long>(uniform(rng, lo, static_cast<int>(max_coeff) + 2)));
  }
  const int nterms = uniform(rng, allow_zero ? 0 : 1, max_terms);
  if (nterms == 0) return Ordinal();
  std::vector<Ordinal::Term> terms;
  for (int i = 0; i < nterms; ++i) {
    Ordinal e = random_ordinal_at(rng, depth - 1, max_terms, max_coeff, true);
    terms.push_back({std::move(e), BigInt(uniform(rng, 1, static_cast<int>(max_coeff)))});
  }
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace

Ordinal OrdinalGen::operator()(std::mt19937& rng) const {
  return random_ordinal_at(rng, uniform(rng, 0, max_depth), max_terms, max_coeff, allow_zero);
}

Ordinal random_infinite_ordinal(std::mt19937& rng, int max_depth, int max_terms,
                                unsigned max_coeff) {
  for (;;) {
    Ordinal o = random_ordinal_at(rng, std::max(1, uniform(rng, 1, max_depth)), max_terms,
                                  max_coeff, true);
    if (o.is_infinite()) return o;
    // Force an infinite leading term in front of whatever came out.
    Ordinal lead = omega_pow(random_ordinal_at(rng, max_depth - 1, max_terms, max_coeff, false));
    if (lead.is_infinite()) return add(lead, o);
  }
}

WqoExprPtr random_expr(std::mt19937& rng, int size_budget) {
  if (size_budget <= 1) {
    switch (uniform(rng, 0, 2)) {
      case 0: {
        OrdinalGen gen;
        gen.allow_zero = false;
        for (;;) {
          Ordinal o = gen(rng);
          if (!o.is_zero()) return WqoExpr::ordinal(std::move(o));
        }
      }
      case 1:
        return WqoExpr::gamma(BigInt(uniform(rng, 1, 4)));
      default:
        return WqoExpr::ordinal(omega());
    }
  }
  switch (uniform(rng, 0, 3)) {
    case 0: {  // sum
      const int n = uniform(rng, 2, 3);
      std::vector<WqoExprPtr> cs;
      for (int i = 0; i < n; ++i) cs.push_back(random_expr(rng, (size_budget - 1) / n));
      return WqoExpr::sum(std::move(cs));
    }
    case 1: {  // product
      const int n = uniform(rng, 2, 3);
      std::vector<WqoExprPtr> cs;
      for (int i = 0; i < n; ++i) cs.push_back(random_expr(rng, (size_budget - 1) / n));
      return WqoExpr::product(std::move(cs));
    }
    case 2:
      return WqoExpr::star(random_expr(rng, size_budget / 2));
    default:
      return random_expr(rng, 1);
  }
}

}  // namespace ordcalc
