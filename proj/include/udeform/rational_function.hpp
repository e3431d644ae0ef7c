#pragma once

#include <string>
#include <string_view>

#include "udeform/ring_poly.hpp"

namespace udeform {

/// Quotient of integer polynomials in lowest terms.
///
/// Normal form: gcd(num, den) = 1 over Q, the two parts share no integer
/// content, and den has a positive leading coefficient. Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(RingPoly::constant(1)) {}
  explicit RationalFunction(RingPoly poly) : num_(std::move(poly)), den_(RingPoly::constant(1)) {}
  explicit RationalFunction(const Rational& c);

  /// Reduces num/den to normal form; throws ZeroDivisionError on den == 0.
  static RationalFunction normalize(RingPoly num, RingPoly den);

  const RingPoly& num() const noexcept { return num_; }
  const RingPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  /// Throws ZeroDivisionError at a pole.
  Rational evaluate(const Rational& at) const;
  RationalFunction inverse() const;

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(RationalFunction a);
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  RationalFunction(RingPoly num, RingPoly den, int) : num_(std::move(num)), den_(std::move(den)) {}
  RingPoly num_;
  RingPoly den_;
};

RationalFunction pow(const RationalFunction& base, std::size_t exponent);

/// "(num)/(den)", or just the numerator when den == 1.
std::string to_string(const RationalFunction& f, std::string_view var = "p");
std::string to_latex(const RationalFunction& f, std::string_view var = "p");

template <>
struct coefficient_traits<RingPoly> {
  using field_type = RationalFunction;
  static RingPoly zero() { return RingPoly(); }
  static RingPoly one() { return RingPoly::constant(1); }
  static RationalFunction to_field(const RingPoly& a) { return RationalFunction(a); }
};

}  // namespace udeform
