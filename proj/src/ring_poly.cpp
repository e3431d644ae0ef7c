#include "udeform/ring_poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "udeform/errors.hpp"

namespace udeform {

RingPoly::RingPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

RingPoly::RingPoly(std::initializer_list<long long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long long c : ascending) coeffs_.emplace_back(c);
  trim();
}

RingPoly RingPoly::constant(const BigInt& c) { return RingPoly(std::vector<BigInt>{c}); }

RingPoly RingPoly::variable() { return RingPoly({0, 1}); }

RingPoly RingPoly::monomial(const BigInt& c, std::size_t power) {
  if (c == 0) return {};
  std::vector<BigInt> v(power + 1);
  v[power] = c;
  return RingPoly(std::move(v));
}

void RingPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> RingPoly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

BigInt RingPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt RingPoly::leading() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }

BigInt RingPoly::evaluate(const BigInt& at) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Rational RingPoly::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + Rational(*it);
  return acc;
}

RingPoly RingPoly::scaled(const BigInt& factor) const {
  if (factor == 0) return {};
  std::vector<BigInt> v(coeffs_);
  for (auto& c : v) c *= factor;
  return RingPoly(std::move(v));
}

RingPoly RingPoly::truncated(std::size_t n) const {
  if (n >= coeffs_.size()) return *this;
  return RingPoly(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
}

RingPoly RingPoly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<BigInt> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return RingPoly(std::move(v));
}

RingPoly& RingPoly::operator+=(const RingPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RingPoly& RingPoly::operator-=(const RingPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

RingPoly& RingPoly::operator*=(const RingPoly& rhs) { return *this = *this * rhs; }

RingPoly operator*(const RingPoly& lhs, const RingPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const auto& a = lhs.coeffs_;
  const auto& b = rhs.coeffs_;
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return RingPoly(std::move(out));
}

RingPoly operator-(RingPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

RingPoly pow(const RingPoly& base, std::size_t exponent) {
  RingPoly result = RingPoly::constant(1);
  RingPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

BigInt content(const RingPoly& f) {
  BigInt g = 0;
  for (const auto& c : f.coeffs()) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return boost::multiprecision::abs(g);
}

RingPoly primitive_part(const RingPoly& f) {
  if (f.is_zero()) return f;
  BigInt c = content(f);
  if (f.leading() < 0) c = -c;
  std::vector<BigInt> v(f.coeffs());
  for (auto& x : v) x /= c;
  return RingPoly(std::move(v));
}

namespace {

// Primitive part of lc(b)^k * a mod b for some k >= 0 (a pseudo-remainder
// up to a nonzero constant), which is all a gcd over Q needs.
RingPoly primitive_pseudo_remainder(RingPoly r, const RingPoly& b) {
  const std::size_t db = *b.degree();
  const BigInt lb = b.leading();
  while (!r.is_zero() && *r.degree() >= db) {
    const std::size_t shift = *r.degree() - db;
    const BigInt lr = r.leading();
    const BigInt g = boost::multiprecision::gcd(lr, lb);
    r = r.scaled(lb / g) - b.shifted(shift).scaled(lr / g);
    r = primitive_part(r);
  }
  return r;
}

}  // namespace

RingPoly poly_gcd(const RingPoly& a, const RingPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  RingPoly x = primitive_part(a);
  RingPoly y = primitive_part(b);
  if (*x.degree() < *y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    RingPoly r = primitive_pseudo_remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return primitive_part(x);
}

RingPoly divide_exact(const RingPoly& a, const RingPoly& b) {
  if (b.is_zero()) throw ZeroDivisionError("division by zero polynomial");
  if (a.is_zero()) return {};
  if (*a.degree() < *b.degree()) throw DomainError("divide_exact: divisor does not divide dividend");
  const std::size_t db = *b.degree();
  const BigInt lb = b.leading();
  std::vector<BigInt> rem(a.coeffs());
  std::vector<BigInt> quot(rem.size() - db);
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    if (rem[i] % lb != 0) throw DomainError("divide_exact: divisor does not divide dividend");
    const BigInt q = rem[i] / lb;
    quot[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs()[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (rem[i] != 0) throw DomainError("divide_exact: divisor does not divide dividend");
  }
  return RingPoly(std::move(quot));
}

namespace {

std::string render(const RingPoly& f, std::string_view var, bool latex) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    BigInt mag = boost::multiprecision::abs(c[i]);
    if (first) {
      if (c[i] < 0) out << '-';
    } else {
      out << (latex ? (c[i] < 0 ? "-" : "+") : (c[i] < 0 ? " - " : " + "));
    }
    first = false;
    if (i == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << var;
    if (i > 1) {
      if (latex) {
        out << "^{" << i << '}';
      } else {
        out << '^' << i;
      }
    }
  }
  return out.str();
}

}  // namespace

std::string to_string(const RingPoly& f, std::string_view var) { return render(f, var, false); }

std::string to_latex(const RingPoly& f, std::string_view var) { return render(f, var, true); }

}  // namespace udeform
