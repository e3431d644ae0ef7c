#include "udeform/rational_function.hpp"

#include <utility>

#include "udeform/errors.hpp"

namespace udeform {

RationalFunction::RationalFunction(const Rational& c)
    : num_(RingPoly::constant(numerator_of(c))), den_(RingPoly::constant(denominator_of(c))) {}

RationalFunction RationalFunction::normalize(RingPoly num, RingPoly den) {
  if (den.is_zero()) throw ZeroDivisionError("division by zero polynomial");
  if (num.is_zero()) return RationalFunction();
  const RingPoly g = poly_gcd(num, den);
  if (*g.degree() > 0) {
    num = divide_exact(num, g);
    den = divide_exact(den, g);
  }
  BigInt c = boost::multiprecision::gcd(content(num), content(den));
  if (den.leading() < 0) c = -c;
  if (c != 1) {
    std::vector<BigInt> n(num.coeffs());
    std::vector<BigInt> d(den.coeffs());
    for (auto& x : n) x /= c;
    for (auto& x : d) x /= c;
    num = RingPoly(std::move(n));
    den = RingPoly(std::move(d));
  }
  return RationalFunction(std::move(num), std::move(den), 0);
}

Rational RationalFunction::evaluate(const Rational& at) const {
  const Rational d = den_.evaluate(at);
  if (d == 0) throw ZeroDivisionError("pole at " + to_string(at));
  return num_.evaluate(at) / d;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw ZeroDivisionError("inverse of zero rational function");
  return normalize(den_, num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) return *this = normalize(num_ + rhs.num_, den_);
  return *this = normalize(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) return *this = normalize(num_ - rhs.num_, den_);
  return *this = normalize(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  return *this = normalize(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) throw ZeroDivisionError("division by zero rational function");
  return *this = normalize(num_ * rhs.den_, den_ * rhs.num_);
}

RationalFunction operator-(RationalFunction a) {
  a.num_ = -a.num_;
  return a;
}

RationalFunction pow(const RationalFunction& base, std::size_t exponent) {
  if (exponent == 0) return RationalFunction(RingPoly::constant(1));
  // Powers of a reduced fraction stay reduced.
  return RationalFunction::normalize(pow(base.num(), exponent), pow(base.den(), exponent));
}

std::string to_string(const RationalFunction& f, std::string_view var) {
  if (f.den() == RingPoly::constant(1)) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

std::string to_latex(const RationalFunction& f, std::string_view var) {
  if (f.den() == RingPoly::constant(1)) return to_latex(f.num(), var);
  return "\\frac{" + to_latex(f.num(), var) + "}{" + to_latex(f.den(), var) + "}";
}

}  // namespace udeform
