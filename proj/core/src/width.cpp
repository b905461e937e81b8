#include "ordcalc/width.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ordcalc/cnf_views.hpp"
#include "ordcalc/errors.hpp"

namespace ordcalc {

namespace {

const Ordinal kOne(1ULL);

std::string slice_label(const std::vector<std::size_t>& idx) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) os << ',';
    os << idx[i];
  }
  os << ')';
  return os.str();
}

std::vector<std::string> render_all(const std::vector<Ordinal>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

bool all_indecomposable(const std::vector<Ordinal>& factors) {
  return std::all_of(factors.begin(), factors.end(),
                     [](const Ordinal& f) { return f.is_indecomposable(); });
}

}  // namespace

Ordinal width_indecomposable_product(std::vector<Ordinal> exponents) {
  if (exponents.empty())
    throw std::invalid_argument("width_indecomposable_product: empty exponent list");
  std::sort(exponents.begin(), exponents.end(),
            [](const Ordinal& a, const Ordinal& b) { return compare(a, b) > 0; });
  if (exponents.size() == 1 || exponents[1].is_zero()) return kOne;
  Ordinal rest;
  for (std::size_t i = 1; i < exponents.size(); ++i) rest = nat_sum(rest, exponents[i]);
  return omega_pow(nat_sum(exponents[0], left_sub(rest, kOne)));
}

Ordinal width_finite_product(const std::vector<BigInt>& ks, std::size_t poly_budget) {
  std::size_t degree = 0;
  for (const BigInt& k : ks) {
    if (k < 1) throw std::invalid_argument("width_finite_product: factors must be >= 1");
    if (k - 1 > poly_budget)
      throw ResourceLimitError("width_finite_product: polynomial degree exceeds budget");
    degree += BigInt(k - 1).convert_to<std::size_t>();
    if (degree > poly_budget)
      throw ResourceLimitError("width_finite_product: polynomial degree exceeds budget");
  }
  std::vector<BigInt> poly{BigInt(1)};
  for (const BigInt& k : ks) {
    const std::size_t d = BigInt(k - 1).convert_to<std::size_t>();
    if (d == 0) continue;
    std::vector<BigInt> next(poly.size() + d, BigInt(0));
    // multiply by 1 + x + ... + x^d
    for (std::size_t i = 0; i < poly.size(); ++i) {
      for (std::size_t j = 0; j <= d; ++j) next[i + j] += poly[i];
    }
    poly = std::move(next);
  }
  return Ordinal(poly[(poly.size() - 1) / 2]);
}

Ordinal width_infinite_product(const std::vector<Ordinal>& factors, Strategy strategy,
                               const WidthConfig& config, Trace* trace) {
  if (factors.empty())
    throw NotAllInfiniteError("width_infinite_product: empty factor list");
  for (const Ordinal& f : factors) {
    if (f.is_finite())
      throw NotAllInfiniteError("width_infinite_product: factor " + f.to_string() +
                                " is finite");
  }

  // Products of indecomposables have a single grounded slice; this also
  // grounds the meta-strategy recursion.
  if (all_indecomposable(factors)) {
    std::vector<Ordinal> exps;
    exps.reserve(factors.size());
    for (const Ordinal& f : factors) exps.push_back(f.terms()[0].exponent);
    Ordinal w = width_indecomposable_product(exps);
    trace_step(trace, "width of a product of indecomposables", "width.indecomposable-product",
               render_all(factors), w.to_string());
    return w;
  }

  // Only the plain strategy reads the expanded view; 0 keeps it unmaterialized.
  const std::size_t plain_cap = strategy == Strategy::Plain ? config.slice_budget : 0;
  std::vector<CnfViews> views;
  views.reserve(factors.size());
  for (const Ordinal& f : factors) views.push_back(cnf_views(f, plain_cap));

  Ordinal total;
  switch (strategy) {
    case Strategy::Plain: {
      for (const Slice& s : grounded_plain_slices(views, config.slice_budget)) {
        std::vector<Ordinal> exps;
        exps.reserve(views.size());
        for (std::size_t i = 0; i < views.size(); ++i) exps.push_back(views[i].plain[s.indices[i]]);
        Ordinal w = width_indecomposable_product(exps);
        trace_step(trace, "grounded slice " + slice_label(s.indices), "width.slice",
                   render_all(exps), w.to_string());
        total = nat_sum(total, w);
      }
      break;
    }
    case Strategy::Developed: {
      for (const DevelopedSlice& s : grounded_developed_slices(views, config.slice_budget)) {
        std::vector<Ordinal> exps;
        exps.reserve(views.size());
        for (std::size_t i = 0; i < views.size(); ++i)
          exps.push_back(views[i].developed[s.indices[i]].exponent);
        Ordinal w = width_indecomposable_product(exps);
        Ordinal contribution = nat_prod(w, Ordinal(s.multiplicity));
        auto inputs = render_all(exps);
        inputs.push_back(Ordinal(s.multiplicity).to_string());
        trace_step(trace, "grounded slice " + slice_label(s.indices) + " with multiplicity",
                   "width.developed-slice", std::move(inputs), contribution.to_string());
        total = nat_sum(total, contribution);
      }
      break;
    }
    case Strategy::Meta: {
      WidthConfig inner = config;
      inner.strategy = strategy;  // keep the recursion on the same formula
      for (const MetaSlice& m : grounded_meta_slices(views, config.slice_budget)) {
        std::vector<Ordinal> sub;
        sub.reserve(views.size());
        std::vector<bool> leading(views.size(), false);
        for (std::size_t p : m.positions) leading[p] = true;
        for (std::size_t i = 0; i < views.size(); ++i) {
          sub.push_back(leading[i] ? omega_pow(views[i].leading_exponent) : views[i].tail);
        }
        // A zero tail makes the sub-product empty, so the term vanishes.
        Ordinal w = width_product(sub, inner, nullptr);
        Ordinal contribution = nat_prod(w, Ordinal(m.coefficient));
        auto inputs = render_all(sub);
        inputs.push_back(Ordinal(m.coefficient).to_string());
        trace_step(trace, "meta slice " + slice_label(m.positions) + " with coefficient",
                   "width.meta-slice", std::move(inputs), contribution.to_string());
        total = nat_sum(total, contribution);
      }
      break;
    }
  }
  trace_step(trace, "natural sum over grounded slices", "width.grounded-slices",
             render_all(factors), total.to_string());
  return total;
}

Ordinal width_product(const std::vector<Ordinal>& factors, const WidthConfig& config,
                      Trace* trace) {
  for (const Ordinal& f : factors) {
    if (f.is_zero()) {
      trace_step(trace, "product with an empty factor", "width.empty-factor", render_all(factors),
                 "0");
      return Ordinal();
    }
  }
  std::vector<Ordinal> infinite;
  std::vector<BigInt> finite;
  for (const Ordinal& f : factors) {
    if (f == kOne) continue;  // singleton factors do not change the product
    if (f.is_finite()) {
      finite.push_back(f.finite_value());
    } else {
      infinite.push_back(f);
    }
  }
  if (infinite.empty() && finite.empty()) {
    trace_step(trace, "product of singletons", "width.singleton", render_all(factors), "1");
    return kOne;
  }
  if (infinite.empty()) {
    Ordinal w = width_finite_product(finite, config.slice_budget);
    trace_step(trace, "central coefficient of the finite grid polynomial", "width.finite-grid",
               render_all(factors), w.to_string());
    return w;
  }
  Ordinal w = width_infinite_product(infinite, config.strategy, config, trace);
  if (!finite.empty()) {
    BigInt k = 1;
    for (const BigInt& f : finite) k *= f;
    Ordinal scaled = nat_prod(w, Ordinal(k));
    trace_step(trace, "natural product with the finite factors", "width.finite-factors",
               {w.to_string(), Ordinal(k).to_string()}, scaled.to_string());
    return scaled;
  }
  return w;
}

bool width_equals_otype(const std::vector<Ordinal>& factors) {
  bool any_infinite = false;
  bool has_indecomposable = false;
  int all_infinite_exponents = 0;
  for (const Ordinal& f : factors) {
    if (f.is_finite()) {
      if (f.is_zero() || f.finite_value() < 1)
        throw std::invalid_argument("width_equals_otype: finite factors must be >= 1");
      continue;
    }
    any_infinite = true;
    if (f.is_indecomposable()) has_indecomposable = true;
    if (f.all_exponents_infinite()) ++all_infinite_exponents;
  }
  if (!any_infinite)
    throw NoInfiniteFactorError("width_equals_otype: no infinite factor in the product");
  return has_indecomposable && all_infinite_exponents >= 2;
}

}  // namespace ordcalc
