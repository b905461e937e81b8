#include "ordcalc/ordinal.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "ordcalc/errors.hpp"

namespace ordcalc {

Ordinal::Ordinal(unsigned long long n) {
  if (n > 0) terms_.push_back({Ordinal(), BigInt(n)});
}

Ordinal::Ordinal(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("ordinal from negative integer");
  if (n > 0) terms_.push_back({Ordinal(), n});
}

Ordinal Ordinal::omega() {
  std::vector<Term> t;
  t.push_back({Ordinal(1ULL), BigInt(1)});
  return Ordinal(std::move(t), Trusted{});
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.coefficient < 0) throw std::invalid_argument("negative CNF coefficient");
  }
  std::stable_sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
    return compare(x.exponent, y.exponent) == std::strong_ordering::greater;
  });
  std::vector<Term> merged;
  for (Term& t : terms) {
    if (t.coefficient == 0) continue;
    if (!merged.empty() && merged.back().exponent == t.exponent) {
      merged.back().coefficient += t.coefficient;
    } else {
      merged.push_back(std::move(t));
    }
  }
  return Ordinal(std::move(merged), Trusted{});
}

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

bool Ordinal::is_successor() const {
  return !terms_.empty() && terms_.back().exponent.is_zero();
}

bool Ordinal::is_limit() const { return !terms_.empty() && !is_successor(); }

bool Ordinal::is_indecomposable() const {
  return terms_.size() == 1 && terms_[0].coefficient == 1;
}

bool Ordinal::all_exponents_infinite() const {
  if (terms_.empty()) return false;
  for (const Term& t : terms_) {
    if (t.exponent.is_finite()) return false;
  }
  return true;
}

OrdinalKind Ordinal::classify() const {
  if (is_zero()) return OrdinalKind::Zero;
  return is_successor() ? OrdinalKind::Successor : OrdinalKind::Limit;
}

BigInt Ordinal::finite_value() const {
  if (!is_finite()) throw std::logic_error("finite_value on infinite ordinal");
  return terms_.empty() ? BigInt(0) : terms_[0].coefficient;
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = compare(ta[i].exponent, tb[i].exponent);
    if (c != std::strong_ordering::equal) return c;
    if (ta[i].coefficient != tb[i].coefficient) {
      return ta[i].coefficient < tb[i].coefficient ? std::strong_ordering::less
                                                   : std::strong_ordering::greater;
    }
  }
  return ta.size() <=> tb.size();
}

bool operator==(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  if (ta.size() != tb.size()) return false;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (ta[i].coefficient != tb[i].coefficient) return false;
    if (!(ta[i].exponent == tb[i].exponent)) return false;
  }
  return true;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& lead = b.terms_[0].exponent;
  std::vector<Ordinal::Term> out;
  std::size_t i = 0;
  while (i < a.terms_.size() &&
         compare(a.terms_[i].exponent, lead) == std::strong_ordering::greater) {
    out.push_back(a.terms_[i]);
    ++i;
  }
  Ordinal::Term head = b.terms_[0];
  if (i < a.terms_.size() && a.terms_[i].exponent == lead) {
    head.coefficient += a.terms_[i].coefficient;
  }
  out.push_back(std::move(head));
  out.insert(out.end(), b.terms_.begin() + 1, b.terms_.end());
  return Ordinal(std::move(out), Ordinal::Trusted{});
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  Ordinal acc;
  for (const Ordinal::Term& bt : b.terms_) {
    Ordinal piece;
    if (bt.exponent.is_zero()) {
      // Finite right factor: scale the leading coefficient, keep the tail.
      std::vector<Ordinal::Term> ts = a.terms_;
      ts[0].coefficient *= bt.coefficient;
      piece = Ordinal(std::move(ts), Ordinal::Trusted{});
    } else {
      std::vector<Ordinal::Term> ts;
      ts.push_back({add(a.terms_[0].exponent, bt.exponent), bt.coefficient});
      piece = Ordinal(std::move(ts), Ordinal::Trusted{});
    }
    acc = add(acc, piece);
  }
  return acc;
}

Ordinal nat_sum(const Ordinal& a, const Ordinal& b) {
  std::vector<Ordinal::Term> out;
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (i == a.terms_.size()) {
      out.push_back(b.terms_[j++]);
    } else if (j == b.terms_.size()) {
      out.push_back(a.terms_[i++]);
    } else {
      auto c = compare(a.terms_[i].exponent, b.terms_[j].exponent);
      if (c == std::strong_ordering::greater) {
        out.push_back(a.terms_[i++]);
      } else if (c == std::strong_ordering::less) {
        out.push_back(b.terms_[j++]);
      } else {
        out.push_back({a.terms_[i].exponent, a.terms_[i].coefficient + b.terms_[j].coefficient});
        ++i;
        ++j;
      }
    }
  }
  return Ordinal(std::move(out), Ordinal::Trusted{});
}

Ordinal nat_prod(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  std::vector<Ordinal::Term> cross;
  cross.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& at : a.terms_) {
    for (const auto& bt : b.terms_) {
      cross.push_back({nat_sum(at.exponent, bt.exponent), at.coefficient * bt.coefficient});
    }
  }
  return Ordinal::from_terms(std::move(cross));
}

Ordinal left_sub(const Ordinal& a, const Ordinal& b) {
  std::size_t i = 0;
  for (; i < b.terms_.size(); ++i) {
    if (i >= a.terms_.size()) throw UnderflowError("left_sub: subtrahend exceeds minuend");
    auto c = compare(a.terms_[i].exponent, b.terms_[i].exponent);
    if (c == std::strong_ordering::less)
      throw UnderflowError("left_sub: subtrahend exceeds minuend");
    if (c == std::strong_ordering::greater) {
      return Ordinal(std::vector<Ordinal::Term>(a.terms_.begin() + i, a.terms_.end()),
                     Ordinal::Trusted{});
    }
    if (a.terms_[i].coefficient != b.terms_[i].coefficient) {
      if (a.terms_[i].coefficient < b.terms_[i].coefficient)
        throw UnderflowError("left_sub: subtrahend exceeds minuend");
      std::vector<Ordinal::Term> out;
      out.push_back({a.terms_[i].exponent, a.terms_[i].coefficient - b.terms_[i].coefficient});
      out.insert(out.end(), a.terms_.begin() + i + 1, a.terms_.end());
      return Ordinal(std::move(out), Ordinal::Trusted{});
    }
  }
  return Ordinal(std::vector<Ordinal::Term>(a.terms_.begin() + i, a.terms_.end()),
                 Ordinal::Trusted{});
}

Ordinal omega_pow(const Ordinal& exponent) {
  std::vector<Ordinal::Term> t;
  t.push_back({exponent, BigInt(1)});
  return Ordinal(std::move(t), Ordinal::Trusted{});
}

namespace {

// Removes exactly one copy of the smallest CNF term: w*2+3 -> w*2+2, w^2 -> 0.
Ordinal drop_one_smallest(const Ordinal& a) {
  std::vector<Ordinal::Term> ts = a.terms();
  if (ts.back().coefficient == 1) {
    ts.pop_back();
  } else {
    ts.back().coefficient -= 1;
  }
  return Ordinal::from_terms(std::move(ts));
}

}  // namespace

Ordinal sup_plus_one(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero())
    throw EmptyHeightError("sup_plus_one: arguments must be >= 1");
  const Ordinal& ga = a.terms_.back().exponent;  // 0 exactly when a is a successor
  const Ordinal& gb = b.terms_.back().exponent;
  const Ordinal& g = compare(ga, gb) == std::strong_ordering::less ? gb : ga;
  return add(nat_sum(drop_one_smallest(a), drop_one_smallest(b)), omega_pow(g));
}

std::string Ordinal::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) os << " + ";
    first = false;
    if (t.exponent.is_zero()) {
      os << t.coefficient;
      continue;
    }
    os << 'w';
    if (!(t.exponent == Ordinal(1ULL))) {
      const std::string es = t.exponent.to_string();
      if (es.size() == 1) {
        os << '^' << es;
      } else {
        os << "^(" << es << ')';
      }
    }
    if (t.coefficient != 1) os << '*' << t.coefficient;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << a.to_string(); }

}  // namespace ordcalc
