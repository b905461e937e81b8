#pragma once

#include <random>

#include "ordcalc/ordinal.hpp"
#include "ordcalc/wqo_expr.hpp"

namespace ordcalc {

// Bounded random values for property suites. Deterministic given the engine
// state; the self-test seeds its engines with fixed constants.
struct OrdinalGen {
  int max_depth = 2;     // nesting of exponents; depth 0 is finite
  int max_terms = 3;     // CNF terms per level
  unsigned max_coeff = 3;
  bool allow_zero = true;

  Ordinal operator()(std::mt19937& rng) const;
};

// A random infinite ordinal (leading exponent >= 1).
Ordinal random_infinite_ordinal(std::mt19937& rng, int max_depth = 2, int max_terms = 3,
                                unsigned max_coeff = 3);

// A random expression over ordinals, antichains, sums, products and stars.
WqoExprPtr random_expr(std::mt19937& rng, int size_budget);

}  // namespace ordcalc
