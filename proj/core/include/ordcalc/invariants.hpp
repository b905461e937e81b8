#pragma once

#include "ordcalc/trace.hpp"
#include "ordcalc/width.hpp"
#include "ordcalc/wqo_expr.hpp"

namespace ordcalc {

// Maximal order type. Total on the expression grammar: every elementary wqo
// expressible here has a known o-type below epsilon_0.
InvariantResult otype(const WqoExprPtr& e);

// Height. Unknown for expressions containing a star; Unknown propagates.
InvariantResult height(const WqoExprPtr& e);

// Width, by the covered dispatch over normalized sums of atom products.
// Returns Unknown, never a guess, when no rule applies to some product.
InvariantResult width(const WqoExprPtr& e, const WidthConfig& config = {});

// Distributes products over disjoint sums and merges antichain atoms, so the
// result is a disjoint sum of products of atoms (ordinals, antichains,
// stars). Star children are kept as written. Idempotent.
WqoExprPtr normalize(const WqoExprPtr& e, std::size_t product_budget = kDefaultSliceBudget);

}  // namespace ordcalc
