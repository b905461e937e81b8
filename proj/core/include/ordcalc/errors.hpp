#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordcalc {

// Base for all domain errors raised by the calculator engines.
struct OrdinalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// left_sub(a, b) with b > a.
struct UnderflowError : OrdinalError {
  using OrdinalError::OrdinalError;
};

// cnf_views(0): zero has no Cantor normal form views.
struct ZeroHasNoViewError : OrdinalError {
  using OrdinalError::OrdinalError;
};

// sup_plus_one with an empty (zero) height argument.
struct EmptyHeightError : OrdinalError {
  using OrdinalError::OrdinalError;
};

// Slice enumeration over a product containing a finite factor.
struct NotAllInfiniteError : OrdinalError {
  using OrdinalError::OrdinalError;
};

// width_equals_otype on a product with no infinite factor.
struct NoInfiniteFactorError : OrdinalError {
  using OrdinalError::OrdinalError;
};

// A configured budget (slices, poset elements, polynomial length) was exceeded.
struct ResourceLimitError : OrdinalError {
  using OrdinalError::OrdinalError;
};

// Syntax error, with the character position and the token set that would
// have been accepted there.
struct ParseError : std::runtime_error {
  std::size_t position;
  std::vector<std::string> expected;

  ParseError(const std::string& msg, std::size_t pos, std::vector<std::string> exp = {})
      : std::runtime_error(msg), position(pos), expected(std::move(exp)) {}
};

// An ordinal leaf evaluated to 0; the expression grammar has no empty wqo.
struct ZeroOrdinalLeafError : ParseError {
  using ParseError::ParseError;
};

}  // namespace ordcalc
