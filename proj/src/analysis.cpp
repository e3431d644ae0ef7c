#include "udeform/analysis.hpp"

#include <json.hpp>
#include <sstream>

#include "udeform/errors.hpp"

namespace udeform {

RingPoly deformed_integer(const BigInt& n) {
  if (n < 0) throw DomainError("deformed integer of a negative number");
  return RingPoly(std::vector<BigInt>(to_count(n), BigInt(1)));
}

RationalFunction ConvergentPolys::quotient(std::size_t j) const {
  if (j == 0 || j >= R.size()) throw std::out_of_range("convergent index out of range");
  return RationalFunction::normalize(R[j], S[j]);
}

RingPoly ConvergentPolys::determinant(std::size_t j) const {
  if (j == 0 || j >= R.size()) throw std::out_of_range("convergent index out of range");
  return R[j] * S[j - 1] - S[j] * R[j - 1];
}

RingPoly ConvergentPolys::expected_determinant(std::size_t j) const {
  if (j == 0 || j >= R.size()) throw std::out_of_range("convergent index out of range");
  BigInt e = 0;
  for (std::size_t i = 0; i + 2 <= j; ++i) e += terms[i];
  return RingPoly::monomial(j % 2 == 0 ? 1 : -1, to_count(e));
}

ConvergentPolys convergent_polys(std::span<const BigInt> terms) {
  validate_terms(terms);
  ConvergentPolys out;
  out.terms.assign(terms.begin(), terms.end());
  out.R = {RingPoly::constant(1), deformed_integer(terms[0])};
  out.S = {RingPoly(), RingPoly::constant(1)};
  for (std::size_t j = 1; j < terms.size(); ++j) {
    const RingPoly a = deformed_integer(terms[j]);
    const RingPoly b = RingPoly::monomial(1, to_count(terms[j - 1]));
    out.R.push_back(a * out.R[j] + b * out.R[j - 1]);
    out.S.push_back(a * out.S[j] + b * out.S[j - 1]);
  }
  return out;
}

void PropertyReport::fail(std::string x, std::int64_t index, std::string detail) {
  if (!holds) return;
  holds = false;
  counterexample = Counterexample{std::move(x), index, std::move(detail)};
}

std::string to_json(const PropertyReport& report, int indent) {
  nlohmann::ordered_json j;
  j["property"] = report.property;
  j["holds"] = report.holds;
  if (report.counterexample) {
    j["counterexample"] = {{"x", report.counterexample->x},
                           {"index", report.counterexample->index},
                           {"detail", report.counterexample->detail}};
  } else {
    j["counterexample"] = nullptr;
  }
  j["tested"] = report.tested;
  j["notes"] = report.notes;
  return j.dump(indent);
}

namespace {

void require_nonnegative(const RingPoly& poly) {
  if (poly.is_zero()) throw DomainError("property undefined for the zero polynomial");
  for (const auto& c : poly.coeffs()) {
    if (c < 0) throw DomainError("property needs nonnegative coefficients: " + to_string(poly));
  }
}

int sign_of(const Rational& c) { return c > 0 ? 1 : (c < 0 ? -1 : 0); }

}  // namespace

PropertyReport check_unimodality(const RingPoly& poly) {
  require_nonnegative(poly);
  PropertyReport report;
  report.property = "unimodality";
  report.tested = 1;
  const auto& a = poly.coeffs();
  bool descended = false;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (a[i] > a[i + 1]) descended = true;
    if (descended && a[i] < a[i + 1]) {
      report.fail(to_string(poly), static_cast<std::int64_t>(i), "rise after a descent");
      break;
    }
  }
  return report;
}

PropertyReport check_anti_unimodality(const RingPoly& poly, std::size_t from_index) {
  require_nonnegative(poly);
  PropertyReport report;
  report.property = "anti-unimodality";
  report.tested = 1;
  const auto& a = poly.coeffs();
  for (std::size_t i = from_index; i + 1 < a.size(); ++i) {
    const bool ok = i % 2 == 0 ? a[i] >= a[i + 1] : a[i] <= a[i + 1];
    if (!ok) {
      report.fail(to_string(poly), static_cast<std::int64_t>(i),
                  i % 2 == 0 ? "a_i < a_{i+1} at even i" : "a_i > a_{i+1} at odd i");
      break;
    }
  }
  if (from_index > 0) report.notes.push_back("pairs from index " + std::to_string(from_index));
  return report;
}

PropertyReport check_sign_alternation(const TruncatedSeries& s, std::size_t from_index) {
  PropertyReport report;
  report.property = "alternation";
  report.tested = 1;
  std::vector<std::size_t> zeros;
  int previous = 0;
  for (std::size_t i = from_index; i <= s.order(); ++i) {
    const int sg = sign_of(s[i]);
    if (sg == 0) {
      zeros.push_back(i);
      continue;
    }
    if (previous != 0 && sg == previous) {
      report.fail(to_string(s), static_cast<std::int64_t>(i), "sign repeats among nonzero coefficients");
    }
    previous = sg;
  }
  if (!zeros.empty()) {
    std::ostringstream note;
    note << "zero coefficients at";
    for (auto z : zeros) note << ' ' << z;
    report.notes.push_back(note.str());
  }
  return report;
}

namespace {

ReferenceSequence make_reference(std::string name, std::string oeis, std::initializer_list<long long> values) {
  ReferenceSequence r{std::move(name), std::move(oeis), {}};
  for (long long v : values) r.terms.emplace_back(v);
  return r;
}

}  // namespace

const ReferenceSequence& catalan_numbers() {
  static const ReferenceSequence seq = make_reference(
      "Catalan", "A000108",
      {1LL, 1LL, 2LL, 5LL, 14LL, 42LL, 132LL, 429LL, 1430LL, 4862LL, 16796LL, 58786LL, 208012LL, 742900LL,
       2674440LL, 9694845LL, 35357670LL, 129644790LL, 477638700LL, 1767263190LL, 6564120420LL, 24466267020LL,
       91482563640LL, 343059613650LL, 1289904147324LL});
  return seq;
}

const ReferenceSequence& generalized_catalan_numbers() {
  static const ReferenceSequence seq = make_reference(
      "generalized Catalan", "A004148",
      {1LL, 1LL, 1LL, 2LL, 4LL, 8LL, 17LL, 37LL, 82LL, 185LL, 423LL, 978LL, 2283LL, 5373LL, 12735LL, 30372LL,
       72832LL, 175502LL, 424748LL, 1032004LL, 2516347LL, 6155441LL, 15101701LL, 37150472LL, 91618049LL});
  return seq;
}

const ReferenceSequence& fibonacci_numbers() {
  static const ReferenceSequence seq = make_reference(
      "Fibonacci", "A000045",
      {0LL, 1LL, 1LL, 2LL, 3LL, 5LL, 8LL, 13LL, 21LL, 34LL, 55LL, 89LL, 144LL, 233LL, 377LL, 610LL, 987LL, 1597LL,
       2584LL, 4181LL, 6765LL, 10946LL, 17711LL, 28657LL, 46368LL});
  return seq;
}

PropertyReport match_reference(const TruncatedSeries& s, const ReferenceSequence& ref, bool alternating,
                               std::size_t from, std::size_t shift, int first_sign) {
  PropertyReport report;
  report.property = "match-" + ref.oeis;
  report.tested = 1;
  if (from < shift) throw DomainError("reference offset exceeds the starting index");
  if (s.order() - shift >= ref.terms.size()) throw DomainError("reference sequence " + ref.oeis + " too short");
  int sign = first_sign;
  for (std::size_t i = from; i <= s.order(); ++i) {
    const Rational expected(sign * ref.terms[i - shift]);
    if (s[i] != expected) {
      report.fail(to_string(s), static_cast<std::int64_t>(i),
                  "expected " + to_string(expected) + ", got " + to_string(s[i]));
      break;
    }
    if (alternating) sign = -sign;
  }
  return report;
}

std::vector<Rational> rationals_up_to_ell(std::size_t max_ell) {
  std::vector<Rational> out;
  if (max_ell == 0) return out;
  out.emplace_back(1);
  std::size_t begin = 0;
  for (std::size_t l = 2; l <= max_ell; ++l) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      const Rational y = out[i];
      out.emplace_back(1 + y);
      out.emplace_back(y / (1 + y));
    }
    begin = end;
  }
  return out;
}

TruncatedSeries deformed_series(const PolyParams& u, std::span<const BigInt> terms, std::size_t order) {
  const auto v = f_pair(u, terms);
  return series_of_quotient(v.fx, v.finv, order);
}

TruncatedSeries deformed_series(const PolyParams& u, const Rational& x, std::size_t order) {
  const auto cf = cf_expand(x);
  return deformed_series(u, std::span<const BigInt>(cf.terms()), order);
}

std::size_t stabilization_depth(const PolyParams& u, std::span<const BigInt> a, std::span<const BigInt> b,
                                std::size_t order) {
  return common_prefix(deformed_series(u, a, order), deformed_series(u, b, order));
}

IrrationalSeries irrational_series(StreamingCF& src, const PolyParams& u, std::size_t order) {
  std::vector<BigInt> terms;
  BigInt sum = 0;
  while (sum < order + 1) {
    terms.push_back(src.next());
    sum += terms.back();
  }
  terms.push_back(src.next());

  const std::span<const BigInt> all(terms);
  const auto last = deformed_series(u, all, order);
  const auto previous = deformed_series(u, all.first(terms.size() - 1), order);
  if (last != previous) {
    throw StabilizationError("convergents disagree at order " + std::to_string(order) + ": " +
                             to_string(previous) + " vs " + to_string(last));
  }
  IrrationalSeries out{last};
  out.proved = u == szero_family() && terms[0] >= 1;
  out.terms_used = terms.size();
  return out;
}

PropertyReport run_sweep(std::string property, std::size_t max_ell, const Probe& probe, unsigned jobs) {
  const auto inputs = rationals_up_to_ell(max_ell);
  const auto findings = parallel_map(inputs, probe, jobs);
  PropertyReport report;
  report.property = std::move(property);
  report.tested = inputs.size();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (findings[i]) {
      report.fail(to_string(inputs[i]), findings[i]->index, findings[i]->detail);
      break;
    }
  }
  return report;
}

namespace {

std::optional<Finding> from_report(const PropertyReport& r) {
  if (r.holds) return std::nullopt;
  return Finding{r.counterexample->index, r.counterexample->detail};
}

}  // namespace

PropertyReport sweep_integrality(const PolyParams& u, std::size_t max_ell, std::size_t order, unsigned jobs) {
  auto probe = [&](const Rational& x) -> std::optional<Finding> {
    const auto check = series_is_integral(deformed_series(u, x, order));
    if (check.integral) return std::nullopt;
    return Finding{static_cast<std::int64_t>(*check.first_non_integer), "non-integer coefficient"};
  };
  return run_sweep("integrality", max_ell, probe, jobs);
}

PropertyReport sweep_unimodality(const PolyParams& u, std::size_t max_ell, unsigned jobs) {
  auto probe = [&](const Rational& x) { return from_report(check_unimodality(f_pair(u, x).fx)); };
  return run_sweep("unimodality", max_ell, probe, jobs);
}

PropertyReport sweep_anti_unimodality(const PolyParams& u, std::size_t max_ell, std::size_t from_index,
                                      unsigned jobs) {
  auto probe = [&](const Rational& x) { return from_report(check_anti_unimodality(f_pair(u, x).fx, from_index)); };
  auto report = run_sweep("anti-unimodality", max_ell, probe, jobs);
  if (from_index > 0) report.notes.push_back("pairs from index " + std::to_string(from_index));
  return report;
}

PropertyReport sweep_alternation(const PolyParams& u, std::size_t max_ell, std::size_t order,
                                 std::size_t from_index, unsigned jobs) {
  auto probe = [&](const Rational& x) {
    return from_report(check_sign_alternation(deformed_series(u, x, order), from_index));
  };
  auto report = run_sweep("alternation", max_ell, probe, jobs);
  report.notes.push_back("judged on nonzero coefficients of the series of [x]");
  if (from_index > 0) report.notes.push_back("from index " + std::to_string(from_index));
  return report;
}

PropertyReport sweep_stabilization(const PolyParams& u, std::size_t max_ell, bool sharp, unsigned jobs) {
  auto probe = [&](const Rational& x) -> std::optional<Finding> {
    const auto cf = cf_expand(x);
    const auto& t = cf.terms();
    if (x < 1 || t.size() < 2) return std::nullopt;
    const std::span<const BigInt> full(t);
    const auto prev = full.first(t.size() - 1);
    const auto l = to_count(cf.ell());
    const auto depth = stabilization_depth(u, prev, full, l + 1);
    BigInt l_prev = 0;
    for (const auto& n : prev) l_prev += n;
    const auto required = sharp ? to_count(l_prev) : l - 1;
    const bool ok = sharp ? depth == required : depth >= required;
    if (ok) return std::nullopt;
    return Finding{static_cast<std::int64_t>(depth),
                   "common prefix " + std::to_string(depth) + (sharp ? ", expected " : ", bound ") +
                       std::to_string(required)};
  };
  return run_sweep(sharp ? "stabilization-sharp" : "stabilization", max_ell, probe, jobs);
}

PropertyReport sweep_involution(std::size_t max_ell, unsigned jobs) {
  auto probe = [](const Rational& x) -> std::optional<Finding> {
    const Rational jx = j_quotient(x);
    if (j_quotient(jx) != x) return Finding{0, "J(J(x)) = " + to_string(j_quotient(jx))};
    const auto cf = cf_expand(x);
    const bool has_rewrite = cf.terms().size() >= 2 && !(cf.terms()[0] == 0 && cf.terms().size() < 3);
    if (has_rewrite && j_rewrite(cf).value() != jx) {
      return Finding{1, "rewrite gives " + to_string(j_rewrite(cf).value()) + ", quotient " + to_string(jx)};
    }
    return std::nullopt;
  };
  return run_sweep("involution", max_ell, probe, jobs);
}

PropertyReport check_parity_dip(const TruncatedSeries& s, std::size_t first, std::size_t last) {
  if (s.order() < last + 1) throw DomainError("series too short for the parity check");
  PropertyReport report;
  report.property = "parity-dip";
  report.tested = 1;
  for (std::size_t i = first; i <= last; i += 2) {
    const Rational a = abs(s[i]);
    const Rational m = std::max(abs(s[i - 1]), abs(s[i + 1]));
    if (!(a < m)) {
      report.fail(to_string(s), static_cast<std::int64_t>(i), "|c_i| is not below its neighbours");
      break;
    }
  }
  return report;
}

}  // namespace udeform
