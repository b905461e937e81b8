#pragma once

#include <cstddef>
#include <vector>

#include "ordcalc/ordinal.hpp"
#include "ordcalc/slices.hpp"
#include "ordcalc/trace.hpp"

namespace ordcalc {

// Which of the three equivalent grounded-slice formulas drives
// width_infinite_product. Developed is the default: it enumerates one slice
// per developed CNF term instead of one per expanded term.
enum class Strategy { Plain, Developed, Meta };

struct WidthConfig {
  Strategy strategy = Strategy::Developed;
  std::size_t slice_budget = kDefaultSliceBudget;
};

// Width of w^e1 x ... x w^en for exponents e_i >= 0: 1 when at most one
// exponent is nonzero, else w^(e_(1) (+) ((e_(2) (+) ... (+) e_(n)) - 1))
// with e_(1) the largest exponent and -1 the left subtraction of 1.
Ordinal width_indecomposable_product(std::vector<Ordinal> exponents);

// Width of a product of finite chains k_i >= 1: the central coefficient of
// prod (1 + x + ... + x^(k_i - 1)), by big-integer convolution.
Ordinal width_finite_product(const std::vector<BigInt>& ks,
                             std::size_t poly_budget = kDefaultSliceBudget);

// Width of a product of infinite ordinals: natural sum of per-grounded-slice
// widths, in the chosen formula. All three strategies agree.
Ordinal width_infinite_product(const std::vector<Ordinal>& factors, Strategy strategy,
                               const WidthConfig& config = {}, Trace* trace = nullptr);

// Width of an arbitrary product of ordinals: 0 on any empty factor, finite
// and infinite parts dispatched and combined with the natural product.
Ordinal width_product(const std::vector<Ordinal>& factors, const WidthConfig& config = {},
                      Trace* trace = nullptr);

// Whether the width of the product equals its maximal order type: true iff
// some infinite factor is indecomposable and two distinct infinite factors
// have only infinite CNF exponents. Finite factors must be >= 1.
// Throws NoInfiniteFactorError when no factor is infinite.
bool width_equals_otype(const std::vector<Ordinal>& factors);

}  // namespace ordcalc
