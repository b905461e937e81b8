#include "ordcalc/cnf_views.hpp"

#include "ordcalc/errors.hpp"

namespace ordcalc {

BigInt CnfViews::plain_length() const {
  BigInt total = 0;
  for (const auto& t : developed) total += t.multiplicity;
  return total;
}

Ordinal CnfViews::reassemble() const {
  std::vector<Ordinal::Term> ts;
  ts.reserve(developed.size());
  for (const auto& t : developed) ts.push_back({t.exponent, t.multiplicity});
  return Ordinal::from_terms(std::move(ts));
}

CnfViews cnf_views(const Ordinal& a, std::size_t plain_cap) {
  if (a.is_zero()) throw ZeroHasNoViewError("cnf_views: zero has no normal-form views");
  CnfViews v;
  for (const auto& t : a.terms()) v.developed.push_back({t.exponent, t.coefficient});
  v.leading_exponent = a.terms()[0].exponent;
  v.leading_multiplicity = a.terms()[0].coefficient;
  {
    std::vector<Ordinal::Term> rest(a.terms().begin() + 1, a.terms().end());
    v.tail = Ordinal::from_terms(std::move(rest));
  }
  if (v.plain_length() > plain_cap) {
    v.plain_truncated = true;
  } else {
    for (const auto& t : a.terms()) {
      for (BigInt i = 0; i < t.coefficient; ++i) v.plain.push_back(t.exponent);
    }
  }
  return v;
}

}  // namespace ordcalc
