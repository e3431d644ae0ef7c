#include "udeform/truncated_series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "udeform/errors.hpp"

namespace udeform {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("a truncated series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::from_poly(const RingPoly& f, std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t i = 0; i <= order && i < f.coeffs().size(); ++i) s.coeffs_[i] = Rational(f.coeffs()[i]);
  return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order >= this->order()) return *this;
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= out.order(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (b.coeffs_[0] == 0) throw ZeroDivisionError("no Taylor expansion at origin");
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t n = 0; n <= out.order(); ++n) {
    Rational acc = a.coeffs_[n];
    for (std::size_t i = 0; i < n; ++i) {
      if (b.coeffs_[n - i] != 0) acc -= b.coeffs_[n - i] * out.coeffs_[i];
    }
    out.coeffs_[n] = acc / b.coeffs_[0];
  }
  return out;
}

TruncatedSeries series_of_quotient(const RingPoly& num, const RingPoly& den, std::size_t order) {
  if (den.is_zero()) throw ZeroDivisionError("division by zero polynomial");
  if (den.coeff(0) == 0) throw ZeroDivisionError("no Taylor expansion at origin");
  // Integer long division while the constant term is a unit keeps the hot
  // loop out of rational arithmetic; it covers every deformation in practice.
  const BigInt b0 = den.coeff(0);
  const std::size_t db = den.coeffs().size();
  if (b0 == 1 || b0 == -1) {
    std::vector<BigInt> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
      BigInt acc = num.coeff(n);
      for (std::size_t i = 1; i <= n && i < db; ++i) acc -= den.coeffs()[i] * c[n - i];
      c[n] = b0 == 1 ? acc : BigInt(-acc);
    }
    std::vector<Rational> out;
    out.reserve(c.size());
    for (auto& x : c) out.emplace_back(x);
    return TruncatedSeries(std::move(out));
  }
  return TruncatedSeries::from_poly(num, order) / TruncatedSeries::from_poly(den, order);
}

TruncatedSeries series_of_ratfun(const RationalFunction& f, std::size_t order) {
  return series_of_quotient(f.num(), f.den(), order);
}

IntegralityCheck series_is_integral(const TruncatedSeries& s) {
  for (std::size_t i = 0; i <= s.order(); ++i) {
    if (denominator_of(s[i]) != 1) return {false, i};
  }
  return {};
}

std::size_t common_prefix(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order()) + 1;
  std::size_t k = 0;
  while (k < n && a[k] == b[k]) ++k;
  return k;
}

std::string to_string(const TruncatedSeries& s, std::string_view var) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i <= s.order(); ++i) {
    const Rational& c = s[i];
    if (c == 0) continue;
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) out << to_string(mag);
    if (i >= 1) out << var;
    if (i >= 2) out << '^' << i;
  }
  if (first) out << '0';
  out << " + O(" << var << '^' << s.order() + 1 << ')';
  return out.str();
}

}  // namespace udeform
