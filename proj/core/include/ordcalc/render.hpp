#pragma once

#include <string>

#include <json.hpp>

#include "ordcalc/ordinal.hpp"
#include "ordcalc/trace.hpp"
#include "ordcalc/wqo_expr.hpp"

namespace ordcalc {

// Canonical expression text; parsing it back yields a structurally equal
// tree. Ordinal leaves use the canonical ordinal rendering.
std::string render_expr(const WqoExprPtr& e);

// Recursive JSON encoding: [] for 0, else an array of {"exp": ..., "coeff": n}
// in decreasing exponent order. Coefficients that fit in 64 bits are JSON
// numbers, larger ones decimal strings.
nlohmann::json ordinal_to_json(const Ordinal& a);

// LaTeX rendering: \omega^{...} \cdot c joined with " + ".
std::string ordinal_to_latex(const Ordinal& a);

// Ordered array of {rule, anchor, inputs, output}.
nlohmann::json trace_to_json(const Trace& trace);

}  // namespace ordcalc
