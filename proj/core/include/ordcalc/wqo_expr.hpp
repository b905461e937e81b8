#pragma once

#include <memory>
#include <vector>

#include "ordcalc/ordinal.hpp"

namespace ordcalc {

// Expression tree over well-quasi-orders. Immutable; nodes are shared.
//
// Leaves are positive ordinals (chains) and finite antichains Gamma_k with
// k >= 1; combinators are disjoint sum, cartesian product and the
// finite-sequence (Higman star) construction. The empty wqo is not
// representable.
class WqoExpr {
 public:
  enum class Kind { Ordinal, Gamma, Sum, Product, Star };
  using Ptr = std::shared_ptr<const WqoExpr>;

  static Ptr ordinal(Ordinal value);            // value >= 1
  static Ptr gamma(BigInt k);                   // k >= 1
  static Ptr sum(std::vector<Ptr> children);    // >= 1 child
  static Ptr product(std::vector<Ptr> children);// >= 1 child
  static Ptr star(Ptr child);

  Kind kind() const { return kind_; }
  const Ordinal& ordinal_value() const { return ordinal_; }
  const BigInt& gamma_size() const { return gamma_; }
  const std::vector<Ptr>& children() const { return children_; }
  const Ptr& child() const { return children_[0]; }

  bool is_atom() const {
    return kind_ == Kind::Ordinal || kind_ == Kind::Gamma || kind_ == Kind::Star;
  }

 private:
  WqoExpr() = default;
  Kind kind_ = Kind::Ordinal;
  Ordinal ordinal_;
  BigInt gamma_ = 0;
  std::vector<Ptr> children_;
};

using WqoExprPtr = WqoExpr::Ptr;

bool equal(const WqoExprPtr& a, const WqoExprPtr& b);

}  // namespace ordcalc
