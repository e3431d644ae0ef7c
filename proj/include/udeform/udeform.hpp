#pragma once

// U-deformation of continued fractions.
//
// For a parameter matrix U = (p q; r s) the system
//   f(1 + x)       = p f(x) + q f(1/x)
//   f(x / (1 + x)) = r f(x) + s f(1/x),   f(1) = 1
// has a unique solution f_U on the positive rationals, and the deformation of
// x is the quotient f_U(x) / f_U(1/x). Everything here is generic over the
// coefficient domain: BigInt for numeric matrices, RingPoly when an entry is
// the formal variable p.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "udeform/contfrac.hpp"
#include "udeform/errors.hpp"
#include "udeform/exactnum.hpp"

namespace udeform {

template <CoefficientDomain T>
class UParams {
 public:
  /// Throws DegenerateMatrixError when qs - rp == 0.
  static UParams make(T p, T q, T r, T s) {
    UParams u(std::move(p), std::move(q), std::move(r), std::move(s));
    if (u.delta() == coefficient_traits<T>::zero()) {
      throw DegenerateMatrixError("degenerate parameter matrix: qs - rp = 0");
    }
    return u;
  }
  /// Skips the determinant check. Only for exercising degenerate matrices.
  static UParams unchecked(T p, T q, T r, T s) {
    return UParams(std::move(p), std::move(q), std::move(r), std::move(s));
  }

  const T& p() const noexcept { return p_; }
  const T& q() const noexcept { return q_; }
  const T& r() const noexcept { return r_; }
  const T& s() const noexcept { return s_; }
  T delta() const { return q_ * s_ - r_ * p_; }

  friend bool operator==(const UParams&, const UParams&) = default;

 private:
  UParams(T p, T q, T r, T s) : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)) {}
  T p_, q_, r_, s_;
};

using IntParams = UParams<BigInt>;
using PolyParams = UParams<RingPoly>;

/// (1 1; 1 0): the solution is the numerator function.
IntParams numerator_params();
/// (1 1; 0 1): the solution is the conumerator.
IntParams conumerator_params();
/// (p 1; 1 0).
PolyParams szero_family();
/// (p 1; 0 1).
PolyParams rzero_family();
/// Embeds an integer matrix as constant polynomials.
PolyParams to_poly_params(const IntParams& u);

/// The pair (f_U(x), f_U(1/x)).
template <CoefficientDomain T>
struct FPair {
  T fx;
  T finv;
  friend bool operator==(const FPair&, const FPair&) = default;
};

namespace detail {

template <CoefficientDomain T>
struct Mat2 {
  T a, b, c, d;
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  FPair<T> apply(const FPair<T>& v) const { return {a * v.fx + b * v.finv, c * v.fx + d * v.finv}; }
};

// x -> 1 + x:        (f(x), f(1/x)) -> (p f(x) + q f(1/x), s f(x) + r f(1/x))
template <CoefficientDomain T>
Mat2<T> shift_move(const UParams<T>& u) {
  return {u.p(), u.q(), u.s(), u.r()};
}

// x -> x / (1 + x):  (f(x), f(1/x)) -> (r f(x) + s f(1/x), q f(x) + p f(1/x))
template <CoefficientDomain T>
Mat2<T> contract_move(const UParams<T>& u) {
  return {u.r(), u.s(), u.q(), u.p()};
}

template <CoefficientDomain T>
FPair<T> apply_power(const Mat2<T>& m, BigInt count, FPair<T> v) {
  if constexpr (std::is_same_v<T, BigInt>) {
    // Numeric matrices: binary powering keeps huge partial quotients cheap.
    Mat2<T> base = m;
    while (count > 0) {
      if ((count & 1) != 0) v = base.apply(v);
      count >>= 1;
      if (count > 0) base = base * base;
    }
  } else {
    // Polynomial entries: repeated application is linear in the degree per
    // step, cheaper than squaring dense polynomial matrices.
    const auto n = to_count(count);
    for (std::uint64_t i = 0; i < n; ++i) v = m.apply(v);
  }
  return v;
}

}  // namespace detail

/// Solves the system along the continued fraction of x.
///
/// Descending from x to 1 takes n0 shifts, n1 contractions, n2 shifts, ...
/// with the last run shortened by one; the values are obtained by applying
/// the corresponding linear moves to v(1) = (1, 1) in reverse order. Any
/// valid term list is accepted (a trailing 1 is fine).
template <CoefficientDomain T>
FPair<T> f_pair(const UParams<T>& u, std::span<const BigInt> terms) {
  validate_terms(terms);
  const auto shift = detail::shift_move(u);
  const auto contract = detail::contract_move(u);
  FPair<T> v{coefficient_traits<T>::one(), coefficient_traits<T>::one()};
  for (std::size_t i = terms.size(); i-- > 0;) {
    BigInt count = terms[i];
    if (i + 1 == terms.size()) count -= 1;
    v = detail::apply_power((i % 2 == 0) ? shift : contract, std::move(count), std::move(v));
  }
  return v;
}

template <CoefficientDomain T>
FPair<T> f_pair(const UParams<T>& u, const CFExpansion& cf) {
  return f_pair(u, std::span<const BigInt>(cf.terms()));
}

template <CoefficientDomain T>
FPair<T> f_pair(const UParams<T>& u, const Rational& x) {
  return f_pair(u, cf_expand(x));
}

template <CoefficientDomain T>
field_t<T> fraction_of(const T& num, const T& den) {
  if (den == coefficient_traits<T>::zero()) throw ZeroDivisionError("quantization undefined: f_U(1/x) = 0");
  if constexpr (std::is_same_v<T, BigInt>) {
    return make_rational(num, den);
  } else {
    return RationalFunction::normalize(num, den);
  }
}

/// f_U(x) / f_U(1/x) in lowest terms; throws ZeroDivisionError when the
/// denominator vanishes.
template <CoefficientDomain T>
field_t<T> quantize(const UParams<T>& u, std::span<const BigInt> terms) {
  const auto v = f_pair(u, terms);
  return fraction_of(v.fx, v.finv);
}

template <CoefficientDomain T>
field_t<T> quantize(const UParams<T>& u, const Rational& x) {
  const auto cf = cf_expand(x);
  return quantize(u, std::span<const BigInt>(cf.terms()));
}

/// F(x) = con(1/x): Fibonacci numbers on the integers, extended to Q+.
BigInt codenominator(const Rational& x);
/// J(x) = F(1/x) / F(x).
Rational j_quotient(const Rational& x);

// The s = 0 family ---------------------------------------------------------

namespace detail {

template <typename F>
F field_one() {
  if constexpr (std::is_same_v<F, Rational>) {
    return Rational(1);
  } else {
    return RationalFunction(RingPoly::constant(1));
  }
}

template <typename F>
F field_pow(const F& base, std::uint64_t n) {
  F result = field_one<F>();
  F b = base;
  while (n > 0) {
    if (n & 1U) result = result * b;
    n >>= 1U;
    if (n > 0) b = b * b;
  }
  return result;
}

// 1 + P + ... + P^{n-1}, i.e. (1 - P^n)/(1 - P) without the P = 1 pole.
template <typename F>
F geometric_sum(const F& ratio, std::uint64_t n) {
  F sum = F();
  F term = field_one<F>();
  for (std::uint64_t j = 0; j < n; ++j) {
    sum = sum + term;
    term = term * ratio;
  }
  return sum;
}

template <CoefficientDomain T>
std::pair<field_t<T>, field_t<T>> szero_ratios(const UParams<T>& u) {
  if (u.s() != coefficient_traits<T>::zero()) throw DomainError("formula requires s=0");
  if (u.r() == coefficient_traits<T>::zero()) throw DomainError("formula requires r != 0");
  const auto r = coefficient_traits<T>::to_field(u.r());
  return {coefficient_traits<T>::to_field(u.p()) / r, coefficient_traits<T>::to_field(u.q()) / r};
}

}  // namespace detail

/// For s = 0 with P = p/r, Q = q/r:
///   [x + n] = P^n [x] + (1 - P^n)/(1 - P) Q,   or [x] + nQ when P = 1.
template <CoefficientDomain T>
field_t<T> shift_by_integer(const UParams<T>& u, const field_t<T>& value, std::uint64_t n) {
  const auto [P, Q] = detail::szero_ratios(u);
  using F = field_t<T>;
  if (P == detail::field_one<F>()) {
    F nq = Q;
    nq = nq * F(Rational(static_cast<long long>(n)));
    return value + nq;
  }
  const F pn = detail::field_pow(P, n);
  return pn * value + (detail::field_one<F>() - pn) / (detail::field_one<F>() - P) * Q;
}

/// How the innermost level of the s = 0 continued fraction is closed.
enum class SZeroTail {
  /// [n_k] = P^{n_k - 1} + (1 - P^{n_k - 1})/(1 - P) Q, the shift law applied
  /// to [1] = 1. The nested fraction then equals quantize() exactly.
  exact,
  /// (1 - P^{n_k})/(1 - P) Q, the partial quotient as printed for an
  /// infinite expansion. Differs from the exact tail unless Q = 1.
  displayed,
};

/// Nested-fraction form of the s = 0 deformation:
///   [n0, n1, ...] = G(n0) Q + P^{n0} / (G(n1) Q + P^{n1} / (...)),
/// G(n) = 1 + P + ... + P^{n-1}. Throws ZeroDivisionError naming the depth at
/// which a partial denominator vanishes.
template <CoefficientDomain T>
field_t<T> szero_cf_form(const UParams<T>& u, std::span<const BigInt> terms, SZeroTail tail = SZeroTail::exact) {
  validate_terms(terms);
  const auto [P, Q] = detail::szero_ratios(u);
  using F = field_t<T>;
  const std::size_t k = terms.size() - 1;
  const auto nk = to_count(terms[k]);
  F value = tail == SZeroTail::exact
                ? detail::field_pow(P, nk - 1) + detail::geometric_sum(P, nk - 1) * Q
                : detail::geometric_sum(P, nk) * Q;
  for (std::size_t i = k; i-- > 0;) {
    if (value == F()) throw ZeroDivisionError("zero partial denominator at depth " + std::to_string(i + 1));
    const auto n = to_count(terms[i]);
    value = detail::geometric_sum(P, n) * Q + detail::field_pow(P, n) / value;
  }
  return value;
}

template <CoefficientDomain T>
field_t<T> szero_cf_form(const UParams<T>& u, const CFExpansion& cf, SZeroTail tail = SZeroTail::exact) {
  return szero_cf_form(u, std::span<const BigInt>(cf.terms()), tail);
}

struct GoldenIteration {
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Positive root (Q + sqrt(Q^2 + 4P)) / 2 of t^2 - Q t - P; throws
/// DomainError on a negative discriminant.
double golden_closed_form(const Rational& P, const Rational& Q);
/// Iterates t <- Q + P / t from t = 1 until two iterates differ by < tol.
GoldenIteration golden_iterate(const Rational& P, const Rational& Q, double tol = 1e-12, int max_iterations = 60);

// The r = 0 family ---------------------------------------------------------

/// f_U(x) for U = (p 1; 0 1): Fibonacci polynomials with f(1) = 1,
/// f(2) = 1 + p on the integers, extended to rational index.
RingPoly fibonacci_poly_extend(const Rational& x);

/// Descending continued fraction of [x] under (p 1; 0 1):
///   m_0 p + 1/(m_1 p + 1/( ... + 1/(m_t p + 1))).
/// Built from [1 + y] = p + 1/[y] and [1/y] = 1/[y]; the multiplicities sum
/// to ell(x) - 1.
struct DescendingCF {
  std::vector<std::uint64_t> multiplicities;

  std::uint64_t p_count() const;
  RationalFunction evaluate() const;
  std::string to_string() const;
  std::string to_latex() const;
};

/// Requires x > 1; throws DomainError otherwise.
DescendingCF rzero_descending_cf(const Rational& x);

}  // namespace udeform
