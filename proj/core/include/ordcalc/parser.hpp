#pragma once

#include <string_view>

#include "ordcalc/ordinal.hpp"
#include "ordcalc/wqo_expr.hpp"

namespace ordcalc {

// Grammar (whitespace-insensitive):
//   expr    := prod ("++" prod)*          disjoint sum
//   prod    := atom ("x" atom)*           cartesian product
//   atom    := ordinal | "G" nat | "star" "(" expr ")" | "(" expr ")"
//   ordinal := oterm ("+" oterm)*         ordinary ordinal sum
//   oterm   := "w" ["^" oatom] ["*" nat] | nat
//   oatom   := "w" | nat | "(" ordinal ")"
//
// Ordinal sub-expressions are evaluated and normalized, so "w^2 + w^3"
// parses to the leaf w^3. Throws ParseError with position and expected
// tokens; ZeroOrdinalLeafError when an ordinal leaf evaluates to 0.
WqoExprPtr parse_expr(std::string_view text);

// Parses a bare ordinal in the same grammar.
Ordinal parse_ordinal(std::string_view text);

}  // namespace ordcalc
