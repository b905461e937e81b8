#include "ordcalc/render.hpp"

#include <cstdint>
#include <sstream>

namespace ordcalc {

namespace {

// Parenthesized when a sum child sits inside a product, or a compound child
// inside another compound, so the rendering reparses to the same tree.
void render_into(const WqoExprPtr& e, std::ostream& os, bool parenthesize_compound) {
  const bool compound = e->kind() == WqoExpr::Kind::Sum || e->kind() == WqoExpr::Kind::Product;
  if (compound && parenthesize_compound) {
    os << '(';
    render_into(e, os, false);
    os << ')';
    return;
  }
  switch (e->kind()) {
    case WqoExpr::Kind::Ordinal:
      os << e->ordinal_value().to_string();
      break;
    case WqoExpr::Kind::Gamma:
      os << 'G' << e->gamma_size();
      break;
    case WqoExpr::Kind::Star:
      os << "star(";
      render_into(e->child(), os, false);
      os << ')';
      break;
    case WqoExpr::Kind::Product: {
      bool first = true;
      for (const auto& c : e->children()) {
        if (!first) os << " x ";
        first = false;
        render_into(c, os, true);
      }
      break;
    }
    case WqoExpr::Kind::Sum: {
      bool first = true;
      for (const auto& c : e->children()) {
        if (!first) os << " ++ ";
        first = false;
        render_into(c, os, c->kind() == WqoExpr::Kind::Sum);
      }
      break;
    }
  }
}

}  // namespace

std::string render_expr(const WqoExprPtr& e) {
  std::ostringstream os;
  render_into(e, os, false);
  return os.str();
}

nlohmann::json ordinal_to_json(const Ordinal& a) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : a.terms()) {
    nlohmann::json term;
    term["exp"] = ordinal_to_json(t.exponent);
    if (t.coefficient <= std::numeric_limits<std::uint64_t>::max()) {
      term["coeff"] = t.coefficient.convert_to<std::uint64_t>();
    } else {
      term["coeff"] = t.coefficient.str();
    }
    arr.push_back(std::move(term));
  }
  return arr;
}

std::string ordinal_to_latex(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) os << " + ";
    first = false;
    if (t.exponent.is_zero()) {
      os << t.coefficient;
      continue;
    }
    os << "\\omega";
    if (!(t.exponent == Ordinal(1ULL))) os << "^{" << ordinal_to_latex(t.exponent) << '}';
    if (t.coefficient != 1) os << " \\cdot " << t.coefficient;
  }
  return os.str();
}

nlohmann::json trace_to_json(const Trace& trace) {
  nlohmann::json arr = nlohmann::json::array();
  for (const TraceStep& s : trace) {
    arr.push_back({{"rule", s.rule},
                   {"anchor", s.anchor},
                   {"inputs", s.inputs},
                   {"output", s.output}});
  }
  return arr;
}

}  // namespace ordcalc
