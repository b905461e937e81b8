#pragma once

#include <cstddef>
#include <vector>

#include "ordcalc/ordinal.hpp"

namespace ordcalc {

// The three normal-form views of a positive ordinal:
//   plain:     exponents with multiplicity expanded, non-increasing;
//   developed: (exponent, multiplicity) pairs, exponents strictly decreasing;
//   short:     leading exponent, leading multiplicity, and the remaining tail.
//
// plain is left empty with plain_truncated set when the expansion would
// exceed the cap (coefficients are arbitrary-precision).
struct CnfViews {
  struct DevelopedTerm {
    Ordinal exponent;
    BigInt multiplicity;
  };

  std::vector<Ordinal> plain;
  bool plain_truncated = false;
  std::vector<DevelopedTerm> developed;
  Ordinal leading_exponent;
  BigInt leading_multiplicity;
  Ordinal tail;

  BigInt plain_length() const;  // sum of multiplicities, even when truncated
  Ordinal reassemble() const;   // the original ordinal, from the developed view
};

inline constexpr std::size_t kDefaultPlainCap = std::size_t{1} << 20;

// Throws ZeroHasNoViewError for 0.
CnfViews cnf_views(const Ordinal& a, std::size_t plain_cap = kDefaultPlainCap);

}  // namespace ordcalc
