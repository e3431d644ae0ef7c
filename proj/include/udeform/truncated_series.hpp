#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "udeform/rational_function.hpp"

namespace udeform {

/// Taylor expansion at the origin known up to and including variable^order.
///
/// Coefficients are exact rationals so that non-integrality is observable.
/// Binary operations on series of different orders keep the smaller order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
  /// Takes ownership of c_0..c_N; throws std::invalid_argument if empty.
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries from_poly(const RingPoly& f, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }

  TruncatedSeries truncated(std::size_t order) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  /// Requires a nonzero constant term in b.
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// First order+1 Taylor coefficients of num/den at the origin. No reduction is
/// performed; throws ZeroDivisionError("no Taylor expansion at origin") when
/// den has zero constant term.
TruncatedSeries series_of_quotient(const RingPoly& num, const RingPoly& den, std::size_t order);
TruncatedSeries series_of_ratfun(const RationalFunction& f, std::size_t order);

struct IntegralityCheck {
  bool integral = true;
  std::optional<std::size_t> first_non_integer;
};

IntegralityCheck series_is_integral(const TruncatedSeries& s);

/// Number of leading coefficients on which a and b agree (at most the smaller
/// order + 1).
std::size_t common_prefix(const TruncatedSeries& a, const TruncatedSeries& b);

/// "1 + p - p^2 + ..." in ascending order, ending with "+ O(p^{N+1})".
std::string to_string(const TruncatedSeries& s, std::string_view var = "p");

}  // namespace udeform
