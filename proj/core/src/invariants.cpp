#include "ordcalc/invariants.hpp"

#include <cassert>
#include <utility>

#include "ordcalc/errors.hpp"
#include "ordcalc/render.hpp"

namespace ordcalc {

namespace {

const Ordinal kOne(1ULL);

// o(A) = d + n with w^d = d would need d to solve w^d = d, i.e. a CNF whose
// single term has the whole ordinal as its own exponent. Finite-depth CNF
// cannot satisfy that (the exponent is a strict subterm), so below
// epsilon_0 this is structurally false and the matching star case is dead.
bool epsilon_based(const Ordinal& d) {
  std::vector<Ordinal::Term> ts = d.terms();
  while (!ts.empty() && ts.back().exponent.is_zero()) ts.pop_back();
  Ordinal delta = Ordinal::from_terms(std::move(ts));
  return !delta.is_zero() && omega_pow(delta) == delta;
}

Ordinal otype_value(const WqoExprPtr& e, Trace* trace) {
  switch (e->kind()) {
    case WqoExpr::Kind::Ordinal: {
      trace_step(trace, "order type of an ordinal", "otype.ordinal",
                 {e->ordinal_value().to_string()}, e->ordinal_value().to_string());
      return e->ordinal_value();
    }
    case WqoExpr::Kind::Gamma: {
      Ordinal v{e->gamma_size()};
      trace_step(trace, "order type of a finite antichain", "otype.antichain", {v.to_string()},
                 v.to_string());
      return v;
    }
    case WqoExpr::Kind::Sum: {
      Ordinal acc;
      std::vector<std::string> inputs;
      for (const auto& c : e->children()) {
        Ordinal v = otype_value(c, trace);
        inputs.push_back(v.to_string());
        acc = nat_sum(acc, v);
      }
      trace_step(trace, "natural sum over a disjoint sum", "otype.sum", std::move(inputs),
                 acc.to_string());
      return acc;
    }
    case WqoExpr::Kind::Product: {
      Ordinal acc = kOne;
      std::vector<std::string> inputs;
      for (const auto& c : e->children()) {
        Ordinal v = otype_value(c, trace);
        inputs.push_back(v.to_string());
        acc = nat_prod(acc, v);
      }
      trace_step(trace, "natural product over a cartesian product", "otype.product",
                 std::move(inputs), acc.to_string());
      return acc;
    }
    case WqoExpr::Kind::Star: {
      Ordinal d = otype_value(e->child(), trace);
      Ordinal result;
      if (d.is_zero()) {
        result = kOne;  // sequences over the empty set: just the empty sequence
      } else if (d.is_finite()) {
        result = omega_pow(omega_pow(left_sub(d, kOne)));
      } else if (epsilon_based(d)) {
        assert(false && "unreachable below epsilon_0");
        result = omega_pow(omega_pow(add(d, kOne)));
      } else {
        result = omega_pow(omega_pow(d));
      }
      trace_step(trace, "order type of finite sequences", "otype.star", {d.to_string()},
                 result.to_string());
      return result;
    }
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace

InvariantResult otype(const WqoExprPtr& e) {
  Trace trace;
  Ordinal v = otype_value(e, &trace);
  return InvariantResult::known(std::move(v), std::move(trace));
}

namespace {

struct HeightOutcome {
  std::optional<Ordinal> value;
  std::string reason;
};

HeightOutcome height_value(const WqoExprPtr& e, Trace* trace) {
  switch (e->kind()) {
    case WqoExpr::Kind::Ordinal: {
      trace_step(trace, "height of an ordinal", "height.ordinal",
                 {e->ordinal_value().to_string()}, e->ordinal_value().to_string());
      return {e->ordinal_value(), {}};
    }
    case WqoExpr::Kind::Gamma: {
      trace_step(trace, "height of a finite antichain", "height.antichain",
                 {Ordinal(e->gamma_size()).to_string()}, "1");
      return {kOne, {}};
    }
    case WqoExpr::Kind::Sum: {
      Ordinal best;
      std::vector<std::string> inputs;
      for (const auto& c : e->children()) {
        HeightOutcome h = height_value(c, trace);
        if (!h.value) return h;
        inputs.push_back(h.value->to_string());
        if (compare(*h.value, best) > 0) best = *h.value;
      }
      // max over components is standard order theory, not a product rule
      trace_step(trace, "maximum over a disjoint sum (standard fact)", "height.sum-max",
                 std::move(inputs), best.to_string());
      return {best, {}};
    }
    case WqoExpr::Kind::Product: {
      std::optional<Ordinal> acc;
      std::vector<std::string> inputs;
      for (const auto& c : e->children()) {
        HeightOutcome h = height_value(c, trace);
        if (!h.value) return h;
        inputs.push_back(h.value->to_string());
        acc = acc ? sup_plus_one(*acc, *h.value) : *h.value;
      }
      trace_step(trace, "pairwise height of a cartesian product", "height.product-sup",
                 std::move(inputs), acc->to_string());
      return {*acc, {}};
    }
    case WqoExpr::Kind::Star:
      return {std::nullopt,
              "height of finite-sequence wqos not covered: " + render_expr(e)};
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace

InvariantResult height(const WqoExprPtr& e) {
  Trace trace;
  HeightOutcome h = height_value(e, &trace);
  if (!h.value) return InvariantResult::unknown(std::move(h.reason), std::move(trace));
  return InvariantResult::known(std::move(*h.value), std::move(trace));
}

namespace {

// Flattens to a list of products, each a list of atoms, distributing
// products over disjoint sums.
std::vector<std::vector<WqoExprPtr>> distribute(const WqoExprPtr& e, std::size_t budget) {
  switch (e->kind()) {
    case WqoExpr::Kind::Ordinal:
    case WqoExpr::Kind::Gamma:
    case WqoExpr::Kind::Star:
      return {{e}};
    case WqoExpr::Kind::Sum: {
      std::vector<std::vector<WqoExprPtr>> out;
      for (const auto& c : e->children()) {
        auto sub = distribute(c, budget);
        out.insert(out.end(), sub.begin(), sub.end());
        if (out.size() > budget)
          throw ResourceLimitError("normalize: distributed sum exceeds the budget");
      }
      return out;
    }
    case WqoExpr::Kind::Product: {
      std::vector<std::vector<WqoExprPtr>> out{{}};
      for (const auto& c : e->children()) {
        auto sub = distribute(c, budget);
        std::vector<std::vector<WqoExprPtr>> next;
        next.reserve(out.size() * sub.size());
        for (const auto& left : out) {
          for (const auto& right : sub) {
            std::vector<WqoExprPtr> row = left;
            row.insert(row.end(), right.begin(), right.end());
            next.push_back(std::move(row));
          }
        }
        if (next.size() > budget)
          throw ResourceLimitError("normalize: distributed product exceeds the budget");
        out = std::move(next);
      }
      return out;
    }
  }
  throw std::logic_error("unreachable expression kind");
}

// Merges antichain atoms: G_j x G_k is the antichain of size j*k. The merged
// atom keeps the position of the first antichain; a size-1 result is dropped
// unless it is the only atom left.
std::vector<WqoExprPtr> merge_gammas(const std::vector<WqoExprPtr>& atoms) {
  BigInt k = 1;
  bool saw_gamma = false;
  for (const auto& a : atoms) {
    if (a->kind() == WqoExpr::Kind::Gamma) {
      saw_gamma = true;
      k *= a->gamma_size();
    }
  }
  if (!saw_gamma) return atoms;
  std::vector<WqoExprPtr> out;
  bool emitted = false;
  for (const auto& a : atoms) {
    if (a->kind() != WqoExpr::Kind::Gamma) {
      out.push_back(a);
    } else if (!emitted && k > 1) {
      out.push_back(WqoExpr::gamma(k));
      emitted = true;
    }
  }
  if (out.empty()) out.push_back(WqoExpr::gamma(k));  // product of singleton antichains
  return out;
}

}  // namespace

WqoExprPtr normalize(const WqoExprPtr& e, std::size_t product_budget) {
  std::vector<WqoExprPtr> products;
  for (const auto& atoms : distribute(e, product_budget)) {
    products.push_back(WqoExpr::product(merge_gammas(atoms)));
  }
  return WqoExpr::sum(std::move(products));
}

namespace {

struct WidthOutcome {
  std::optional<Ordinal> value;
  std::string reason;
};

WidthOutcome width_of_atom_product(const std::vector<WqoExprPtr>& atoms,
                                   const WidthConfig& config, Trace* trace) {
  // Antichain factors scale the width by their size.
  BigInt gamma_scale = 1;
  std::vector<WqoExprPtr> rest;
  for (const auto& a : atoms) {
    if (a->kind() == WqoExpr::Kind::Gamma) {
      gamma_scale *= a->gamma_size();
    } else {
      rest.push_back(a);
    }
  }

  // Sequences over a singleton are a chain of finite lengths, i.e. w.
  for (auto& a : rest) {
    if (a->kind() == WqoExpr::Kind::Star && otype_value(a->child(), nullptr) == kOne) {
      trace_step(trace, "sequences over a singleton form a chain of type w",
                 "width.star-singleton", {render_expr(a)}, "w");
      a = WqoExpr::ordinal(omega());
    }
  }

  std::size_t stars = 0;
  for (const auto& a : rest) {
    if (a->kind() == WqoExpr::Kind::Star) ++stars;
  }

  std::optional<Ordinal> w;
  if (stars == 0) {
    std::vector<Ordinal> factors;
    factors.reserve(rest.size());
    for (const auto& a : rest) factors.push_back(a->ordinal_value());
    w = width_product(factors, config, trace);
  } else {
    std::vector<Ordinal> otypes;
    otypes.reserve(rest.size());
    for (const auto& a : rest) otypes.push_back(otype_value(a, nullptr));
    bool has_indec = false;
    int all_inf_exps = 0;
    for (const Ordinal& o : otypes) {
      if (o.is_infinite() && o.is_indecomposable()) has_indec = true;
      if (o.all_exponents_infinite()) ++all_inf_exps;
    }
    bool others_are_omega = true;
    for (const auto& a : rest) {
      if (a->kind() != WqoExpr::Kind::Star && !(a->kind() == WqoExpr::Kind::Ordinal &&
                                                a->ordinal_value() == omega())) {
        others_are_omega = false;
      }
    }
    if (has_indec && all_inf_exps >= 2) {
      Ordinal total = kOne;
      for (const Ordinal& o : otypes) total = nat_prod(total, o);
      std::vector<std::string> inputs;
      for (const Ordinal& o : otypes) inputs.push_back(o.to_string());
      trace_step(trace, "width equals order type for this product", "width.otype-product",
                 std::move(inputs), total.to_string());
      w = total;
    } else if (stars == 1 && rest.size() >= 2 && others_are_omega) {
      Ordinal total = kOne;
      for (const Ordinal& o : otypes) total = nat_prod(total, o);
      std::vector<std::string> inputs;
      for (const Ordinal& o : otypes) inputs.push_back(o.to_string());
      trace_step(trace, "one star against chains of type w", "width.star-times-omegas",
                 std::move(inputs), total.to_string());
      w = total;
    } else if (rest.size() == 1) {
      trace_step(trace, "width of a sequence wqo equals its order type", "width.lone-star",
                 {render_expr(rest[0])}, otypes[0].to_string());
      w = otypes[0];
    } else {
      return {std::nullopt, {}};
    }
  }

  if (gamma_scale > 1) {
    Ordinal scaled = nat_prod(*w, Ordinal(gamma_scale));
    trace_step(trace, "natural product with the antichain sizes", "width.antichain-factor",
               {w->to_string(), Ordinal(gamma_scale).to_string()}, scaled.to_string());
    return {scaled, {}};
  }
  return {*w, {}};
}

}  // namespace

InvariantResult width(const WqoExprPtr& e, const WidthConfig& config) {
  Trace trace;
  WqoExprPtr norm = normalize(e, config.slice_budget);
  Ordinal total;
  std::vector<std::string> inputs;
  for (const auto& prod : norm->children()) {
    WidthOutcome out = width_of_atom_product(prod->children(), config, &trace);
    if (!out.value) {
      return InvariantResult::unknown(
          "no covered width rule applies to the product " + render_expr(prod),
          std::move(trace));
    }
    inputs.push_back(out.value->to_string());
    total = nat_sum(total, *out.value);
  }
  if (norm->children().size() > 1) {
    trace_step(&trace, "natural sum over the disjoint sum", "width.sum", std::move(inputs),
               total.to_string());
  }
  return InvariantResult::known(std::move(total), std::move(trace));
}

}  // namespace ordcalc
