#include "udeform/udeform.hpp"

#include <cmath>
#include <sstream>

namespace udeform {

IntParams numerator_params() { return IntParams::make(1, 1, 1, 0); }

IntParams conumerator_params() { return IntParams::make(1, 1, 0, 1); }

PolyParams szero_family() {
  return PolyParams::make(RingPoly::variable(), RingPoly::constant(1), RingPoly::constant(1), RingPoly());
}

PolyParams rzero_family() {
  return PolyParams::make(RingPoly::variable(), RingPoly::constant(1), RingPoly(), RingPoly::constant(1));
}

PolyParams to_poly_params(const IntParams& u) {
  return PolyParams::unchecked(RingPoly::constant(u.p()), RingPoly::constant(u.q()), RingPoly::constant(u.r()),
                               RingPoly::constant(u.s()));
}

BigInt codenominator(const Rational& x) {
  if (x <= 0) throw DomainError("domain is Q+");
  return f_pair(conumerator_params(), Rational(1 / x)).fx;
}

Rational j_quotient(const Rational& x) {
  if (x <= 0) throw DomainError("domain is Q+");
  return Rational(codenominator(Rational(1 / x)), codenominator(x));
}

double golden_closed_form(const Rational& P, const Rational& Q) {
  const Rational disc = Q * Q + 4 * P;
  if (disc < 0) throw DomainError("negative discriminant Q^2 + 4P");
  const double q = Q.convert_to<double>();
  return (q + std::sqrt(disc.convert_to<double>())) / 2.0;
}

GoldenIteration golden_iterate(const Rational& P, const Rational& Q, double tol, int max_iterations) {
  const double p = P.convert_to<double>();
  const double q = Q.convert_to<double>();
  GoldenIteration out;
  double t = 1.0;
  for (int i = 1; i <= max_iterations; ++i) {
    const double next = q + p / t;
    out.iterations = i;
    const bool done = std::fabs(next - t) < tol;
    t = next;
    if (done) {
      out.converged = true;
      break;
    }
  }
  out.value = t;
  return out;
}

RingPoly fibonacci_poly_extend(const Rational& x) { return f_pair(rzero_family(), x).fx; }

std::uint64_t DescendingCF::p_count() const {
  std::uint64_t n = 0;
  for (auto m : multiplicities) n += m;
  return n;
}

RationalFunction DescendingCF::evaluate() const {
  const RingPoly p = RingPoly::variable();
  RationalFunction value(p.scaled(multiplicities.back()) + RingPoly::constant(1));
  for (std::size_t j = multiplicities.size() - 1; j-- > 0;) {
    value = RationalFunction(p.scaled(multiplicities[j])) + value.inverse();
  }
  return value;
}

namespace {

std::string level(std::uint64_t m, const char* var) {
  if (m == 1) return var;
  return std::to_string(m) + var;
}

}  // namespace

std::string DescendingCF::to_string() const {
  std::ostringstream out;
  const std::size_t t = multiplicities.size() - 1;
  for (std::size_t j = 0; j < t; ++j) out << level(multiplicities[j], "p") << " + 1/(";
  out << level(multiplicities[t], "p") << " + 1";
  for (std::size_t j = 0; j < t; ++j) out << ')';
  return out.str();
}

std::string DescendingCF::to_latex() const {
  std::ostringstream out;
  const std::size_t t = multiplicities.size() - 1;
  for (std::size_t j = 0; j < t; ++j) out << level(multiplicities[j], "p") << "+\\cfrac{1}{";
  out << level(multiplicities[t], "p") << "+1";
  for (std::size_t j = 0; j < t; ++j) out << '}';
  return out.str();
}

DescendingCF rzero_descending_cf(const Rational& x) {
  if (x <= 1) throw DomainError("descending expansion requires x > 1");
  to_count(ell(x), 10'000'000);
  DescendingCF out;
  out.multiplicities.push_back(0);
  Rational z = x;
  for (;;) {
    // [z] = p + 1/[z - 1]
    ++out.multiplicities.back();
    z -= 1;
    if (z == 1) break;  // 1/[1] = 1 closes the current level
    if (z > 1) {
      out.multiplicities.push_back(0);
    } else {
      z = 1 / z;  // 1/[z] = [1/z] stays on the same level
    }
  }
  return out;
}

}  // namespace udeform
