#pragma once

#include <stdexcept>
#include <string>

namespace udeform {

/// Input outside the positive rationals (or another stated precondition).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parameter matrix with qs - rp == 0.
class DegenerateMatrixError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Division by an exact zero (polynomial, rational function or series unit).
class ZeroDivisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A streaming continued fraction ran out of stored terms.
class TermsExhaustedError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Consecutive convergents failed to agree on the requested prefix.
class StabilizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, continued fractions, matrix specs).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace udeform
