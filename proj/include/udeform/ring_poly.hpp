#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "udeform/scalar.hpp"

namespace udeform {

/// Dense univariate polynomial over BigInt, stored in ascending order.
///
/// The coefficient vector never ends in a zero, so equality is structural and
/// the zero polynomial is the empty vector (degree() == std::nullopt).
class RingPoly {
 public:
  RingPoly() = default;
  explicit RingPoly(std::vector<BigInt> ascending);
  RingPoly(std::initializer_list<long long> ascending);

  static RingPoly constant(const BigInt& c);
  /// The formal variable (written `p` or `q` depending on context).
  static RingPoly variable();
  static RingPoly monomial(const BigInt& c, std::size_t power);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  std::optional<std::size_t> degree() const noexcept;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of variable^i, zero past the degree.
  BigInt coeff(std::size_t i) const;
  /// Leading coefficient; zero for the zero polynomial.
  BigInt leading() const;

  BigInt evaluate(const BigInt& at) const;
  Rational evaluate(const Rational& at) const;

  RingPoly scaled(const BigInt& factor) const;
  /// Remainder modulo variable^n.
  RingPoly truncated(std::size_t n) const;
  /// Multiplication by variable^k.
  RingPoly shifted(std::size_t k) const;

  RingPoly& operator+=(const RingPoly& rhs);
  RingPoly& operator-=(const RingPoly& rhs);
  RingPoly& operator*=(const RingPoly& rhs);

  friend RingPoly operator+(RingPoly lhs, const RingPoly& rhs) { return lhs += rhs; }
  friend RingPoly operator-(RingPoly lhs, const RingPoly& rhs) { return lhs -= rhs; }
  friend RingPoly operator*(const RingPoly& lhs, const RingPoly& rhs);
  friend RingPoly operator-(RingPoly a);
  friend bool operator==(const RingPoly&, const RingPoly&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

RingPoly pow(const RingPoly& base, std::size_t exponent);

/// Non-negative gcd of the coefficients (0 for the zero polynomial).
BigInt content(const RingPoly& f);
/// f / content(f), with positive leading coefficient.
RingPoly primitive_part(const RingPoly& f);
/// Primitive gcd over Q with positive leading coefficient; gcd(0, 0) = 0.
RingPoly poly_gcd(const RingPoly& a, const RingPoly& b);
/// a / b over Z; throws DomainError if b does not divide a exactly.
RingPoly divide_exact(const RingPoly& a, const RingPoly& b);

/// Descending human-readable form, e.g. "3p^2 + 3p + 1".
std::string to_string(const RingPoly& f, std::string_view var = "p");
/// LaTeX form with descending powers, e.g. "3p^{2}+3p+1".
std::string to_latex(const RingPoly& f, std::string_view var = "p");

template <>
struct coefficient_traits<RingPoly>;

}  // namespace udeform
