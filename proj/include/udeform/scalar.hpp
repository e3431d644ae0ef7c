#pragma once

// Exact scalar types and the coefficient-domain abstraction.

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace udeform {

/// Arbitrary-precision signed integer. Expression templates are disabled so
/// that `auto` and generic code always see plain values.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Reduced fraction with positive denominator; every constructor normalizes.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline BigInt numerator_of(const Rational& x) { return boost::multiprecision::numerator(x); }
inline BigInt denominator_of(const Rational& x) { return boost::multiprecision::denominator(x); }

/// num/den for any nonzero den; the two-argument Rational constructor
/// rejects a negative denominator.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  return den < 0 ? Rational(-num, -den) : Rational(num, den);
}

/// Parses "a/b" or "n" (optional leading '-'); throws ParseError.
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);

/// "a" when the denominator is 1, "a/b" otherwise.
std::string to_string(const Rational& x);
std::string to_string(const BigInt& x);

/// Checked narrowing for loop counts; throws std::length_error past `limit`.
std::uint64_t to_count(const BigInt& n, std::uint64_t limit = 100'000'000);

// Coefficient domains -------------------------------------------------------

/// Per-type identities and the field of fractions used for quotients.
template <typename T>
struct coefficient_traits;

template <>
struct coefficient_traits<BigInt> {
  using field_type = Rational;
  static BigInt zero() { return BigInt(0); }
  static BigInt one() { return BigInt(1); }
  static Rational to_field(const BigInt& a) { return Rational(a); }
};

/// Commutative ring with identities, exposed through coefficient_traits.
template <typename T>
concept CoefficientDomain = std::regular<T> && requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { coefficient_traits<T>::zero() } -> std::convertible_to<T>;
  { coefficient_traits<T>::one() } -> std::convertible_to<T>;
  typename coefficient_traits<T>::field_type;
};

template <typename T>
using field_t = typename coefficient_traits<T>::field_type;

}  // namespace udeform
