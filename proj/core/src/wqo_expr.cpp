#include "ordcalc/wqo_expr.hpp"

#include <stdexcept>
#include <utility>

namespace ordcalc {

WqoExprPtr WqoExpr::ordinal(Ordinal value) {
  if (value.is_zero()) throw std::invalid_argument("ordinal leaf must be >= 1");
  std::shared_ptr<WqoExpr> n(new WqoExpr());
  n->kind_ = Kind::Ordinal;
  n->ordinal_ = std::move(value);
  return n;
}

WqoExprPtr WqoExpr::gamma(BigInt k) {
  if (k < 1) throw std::invalid_argument("antichain size must be >= 1");
  std::shared_ptr<WqoExpr> n(new WqoExpr());
  n->kind_ = Kind::Gamma;
  n->gamma_ = std::move(k);
  return n;
}

WqoExprPtr WqoExpr::sum(std::vector<Ptr> children) {
  if (children.empty()) throw std::invalid_argument("disjoint sum needs at least one child");
  std::shared_ptr<WqoExpr> n(new WqoExpr());
  n->kind_ = Kind::Sum;
  n->children_ = std::move(children);
  return n;
}

WqoExprPtr WqoExpr::product(std::vector<Ptr> children) {
  if (children.empty()) throw std::invalid_argument("product needs at least one child");
  std::shared_ptr<WqoExpr> n(new WqoExpr());
  n->kind_ = Kind::Product;
  n->children_ = std::move(children);
  return n;
}

WqoExprPtr WqoExpr::star(Ptr child) {
  std::shared_ptr<WqoExpr> n(new WqoExpr());
  n->kind_ = Kind::Star;
  n->children_.push_back(std::move(child));
  return n;
}

bool equal(const WqoExprPtr& a, const WqoExprPtr& b) {
  if (a == b) return true;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case WqoExpr::Kind::Ordinal:
      return a->ordinal_value() == b->ordinal_value();
    case WqoExpr::Kind::Gamma:
      return a->gamma_size() == b->gamma_size();
    default: {
      if (a->children().size() != b->children().size()) return false;
      for (std::size_t i = 0; i < a->children().size(); ++i) {
        if (!equal(a->children()[i], b->children()[i])) return false;
      }
      return true;
    }
  }
}

}  // namespace ordcalc
