#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordcalc {

using BigInt = boost::multiprecision::cpp_int;

enum class OrdinalKind { Zero, Successor, Limit };

// An ordinal below epsilon_0 in Cantor normal form:
//   sum of w^exponent * coefficient with strictly decreasing exponents
//   and coefficients >= 1. The empty term list is 0.
//
// Values are immutable once constructed and always canonical, so equality
// is structural. All operations are pure.
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;  // zero
  Ordinal(unsigned long long n);
  explicit Ordinal(const BigInt& n);

  static Ordinal omega();
  // Normalizes: sorts by decreasing exponent, merges equal exponents,
  // drops zero coefficients. Throws std::invalid_argument on negatives.
  static Ordinal from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  bool is_infinite() const { return !is_finite(); }
  bool is_successor() const;
  bool is_limit() const;
  // Exactly one CNF term with coefficient 1, i.e. of the form w^g.
  bool is_indecomposable() const;
  // Every CNF exponent >= w; false for 0 and for finite positives.
  bool all_exponents_infinite() const;
  OrdinalKind classify() const;

  // Pre: is_finite().
  BigInt finite_value() const;

  // Canonical rendering, bit-exact: "w^w*3 + w^2 + 5", "w", "42", "0".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;

  struct Trusted {};
  Ordinal(std::vector<Term> terms, Trusted) : terms_(std::move(terms)) {}

  friend Ordinal add(const Ordinal&, const Ordinal&);
  friend Ordinal mul(const Ordinal&, const Ordinal&);
  friend Ordinal nat_sum(const Ordinal&, const Ordinal&);
  friend Ordinal nat_prod(const Ordinal&, const Ordinal&);
  friend Ordinal left_sub(const Ordinal&, const Ordinal&);
  friend Ordinal omega_pow(const Ordinal&);
  friend Ordinal sup_plus_one(const Ordinal&, const Ordinal&);
};

struct Ordinal::Term {
  Ordinal exponent;
  BigInt coefficient;
};

// Total order on ordinals; EQ iff structurally identical.
std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

bool operator==(const Ordinal& a, const Ordinal& b);
inline std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  return compare(a, b);
}

// Ordinary (non-commutative) sum: terms of a below the lead of b are absorbed.
Ordinal add(const Ordinal& a, const Ordinal& b);

// Ordinary product, distributing a over the terms of b.
Ordinal mul(const Ordinal& a, const Ordinal& b);

// Hessenberg (natural) sum: CNF term merge.
Ordinal nat_sum(const Ordinal& a, const Ordinal& b);

// Hessenberg (natural) product: all term pairs, exponents via nat_sum.
Ordinal nat_prod(const Ordinal& a, const Ordinal& b);

// The unique g with add(b, g) == a. Throws UnderflowError if b > a.
Ordinal left_sub(const Ordinal& a, const Ordinal& b);

// w^e.
Ordinal omega_pow(const Ordinal& exponent);

// Least upper bound of { x (+) y + 1 : x < a, y < b } for a, b >= 1,
// the height of a product of two chains of heights a and b.
// Throws EmptyHeightError when a or b is 0.
Ordinal sup_plus_one(const Ordinal& a, const Ordinal& b);

inline Ordinal omega() { return Ordinal::omega(); }

std::ostream& operator<<(std::ostream& os, const Ordinal& a);

}  // namespace ordcalc
