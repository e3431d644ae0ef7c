#include <doctest.h>

#include <json.hpp>
#include <set>

#include "oracles.hpp"
#include "reference_values.hpp"
#include "udeform/analysis.hpp"
#include "udeform/errors.hpp"

using namespace udeform;
using oracle::poly;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> v) {
  std::vector<BigInt> out;
  for (long long t : v) out.emplace_back(t);
  return out;
}

}  // namespace

TEST_CASE("deformed integers") {
  CHECK(deformed_integer(0).is_zero());
  CHECK(deformed_integer(3) == poly({1, 1, 1}));
  for (long long n = 1; n < 8; ++n) CHECK(RationalFunction(deformed_integer(n)) == quantize(szero_family(), Rational(n)));
}

TEST_CASE("convergent polynomials") {
  const auto a = big({1, 1});
  const auto c = convergent_polys(a);
  CHECK(c.R[1] == poly({1}));
  CHECK(c.quotient(2) == quantize(szero_family(), Rational(2)));
  const auto b = big({2, 2});
  CHECK(convergent_polys(b).quotient(2) == quantize(szero_family(), Rational(5, 2)));
  const auto d = big({1, 2, 2});
  const auto cd = convergent_polys(d);
  CHECK(cd.determinant(3) == RingPoly::monomial(-1, 3));
  CHECK(cd.determinant(3) == cd.expected_determinant(3));
  CHECK_THROWS_AS(cd.determinant(0), std::out_of_range);
}

TEST_CASE("convergent polynomials: quotient and determinant over prefixes") {
  for (auto src : {StreamingCF::golden(), StreamingCF::e(), StreamingCF::pi()}) {
    std::vector<BigInt> terms;
    BigInt sum = 0;
    while (true) {
      const BigInt t = src.next();
      if (sum + t > 15) break;
      sum += t;
      terms.push_back(t);
    }
    const auto c = convergent_polys(terms);
    for (std::size_t j = 1; j < c.size(); ++j) {
      const std::span<const BigInt> prefix(terms.data(), j);
      REQUIRE(c.quotient(j) == quantize(szero_family(), prefix));
      REQUIRE(c.determinant(j) == c.expected_determinant(j));
    }
  }
}

TEST_CASE("unimodality checker") {
  CHECK(check_unimodality(poly({1, 4, 5, 3, 3, 1})).holds);
  CHECK(check_unimodality(poly({1})).holds);
  const auto r = check_unimodality(poly({2, 1, 2}));
  CHECK_FALSE(r.holds);
  REQUIRE(r.counterexample.has_value());
  CHECK(r.counterexample->index == 1);
  CHECK_THROWS_AS(check_unimodality(poly({1, -1})), DomainError);
  CHECK_THROWS_AS(check_unimodality(RingPoly()), DomainError);
}

TEST_CASE("anti-unimodality checker") {
  const RingPoly f = poly({1, 4, 14, 10, 25, 6, 13, 1, 2});
  const auto literal = check_anti_unimodality(f);
  CHECK_FALSE(literal.holds);
  CHECK(literal.counterexample->index == 0);
  CHECK(check_anti_unimodality(f, 1).holds);
  CHECK(check_anti_unimodality(poly({1})).holds);
  const auto r = check_anti_unimodality(poly({1, 2}));
  CHECK_FALSE(r.holds);
  CHECK(r.counterexample->index == 0);
}

TEST_CASE("sign alternation checker") {
  const auto s1931 = deformed_series(szero_family(), Rational(19, 31), 14);
  CHECK(check_sign_alternation(s1931).holds);
  const auto s75 = deformed_series(szero_family(), Rational(7, 5), 14);
  const auto r = check_sign_alternation(s75);
  CHECK_FALSE(r.holds);
  CHECK(r.counterexample->index == 1);
  REQUIRE(r.notes.size() == 1);
  CHECK(r.notes[0] == "zero coefficients at 3 7 11");
  CHECK(check_sign_alternation(s75, 1).holds);
  const auto geometric = TruncatedSeries(oracle::as_rationals({1, 1, 1, 1}));
  CHECK(check_sign_alternation(geometric).counterexample->index == 1);
}

TEST_CASE("reference sequences agree with their defining formulas") {
  const auto c = oracle::catalan(25);
  const auto g = oracle::generalized_catalan(25);
  const auto f = oracle::fibonacci(25);
  CHECK(catalan_numbers().terms == c);
  CHECK(generalized_catalan_numbers().terms == g);
  CHECK(fibonacci_numbers().terms == f);
  CHECK(catalan_numbers().terms.size() == 25);
}

TEST_CASE("reference matching") {
  auto gold = StreamingCF::golden();
  const auto u = irrational_series(gold, szero_family(), 19).series;
  CHECK(match_reference(u, catalan_numbers(), true, 1, 1, 1).holds);
  const auto printed = TruncatedSeries(oracle::as_rationals(refdata::kQSeriesGolden));
  CHECK(match_reference(printed, generalized_catalan_numbers(), true, 2, 1, 1).holds);
  auto e = StreamingCF::e();
  const auto se = irrational_series(e, szero_family(), 12).series;
  CHECK_FALSE(match_reference(se, catalan_numbers(), true, 1, 1, 1).holds);
  const auto long_series = TruncatedSeries(std::vector<Rational>(40, Rational(1)));
  CHECK_THROWS_AS(match_reference(long_series, catalan_numbers(), false), DomainError);
}

TEST_CASE("enumeration by ell") {
  const auto xs = rationals_up_to_ell(10);
  CHECK(xs.size() == 1023);
  std::set<Rational> seen(xs.begin(), xs.end());
  CHECK(seen.size() == xs.size());
  for (const auto& x : xs) REQUIRE(ell(x) <= 10);
  CHECK(rationals_up_to_ell(0).empty());
}

TEST_CASE("breadth-first oracle") {
  const RingPoly p = RingPoly::variable();
  const auto u = PolyParams::make(p, poly({0, 0, 1}), poly({3}), poly({1, 1}));
  const auto t2 = bfs_oracle(u, 2);
  CHECK(t2.size() == 3);
  CHECK(t2.at(Rational(1)).fx == poly({1}));
  CHECK(t2.at(Rational(2)).fx == u.p() + u.q());
  CHECK(t2.at(Rational(1, 2)).fx == u.r() + u.s());
  for (const auto& [x, v] : bfs_oracle(numerator_params(), 3)) CHECK(v.fx == numerator_of(x));
  for (std::size_t L = 1; L <= 12; ++L) CHECK(bfs_oracle(numerator_params(), L).size() == (std::size_t{1} << L) - 1);
  for (const auto& m : {IntParams::make(2, 3, 1, 1), IntParams::make(3, -1, 2, 5)}) {
    for (const auto& [x, v] : bfs_oracle(m, 10)) REQUIRE(v == f_pair(m, x));
  }
  CHECK_THROWS_AS(bfs_oracle(numerator_params(), 0), DomainError);
}

TEST_CASE("stabilization depth") {
  const auto u = szero_family();
  CHECK(stabilization_depth(u, big({1, 1}), big({1, 1, 1}), 10) >= 2);
  CHECK(stabilization_depth(u, big({2}), big({2, 1}), 10) >= 2);
  CHECK(stabilization_depth(u, big({1, 2}), big({1, 2}), 7) == 8);
  // The common prefix is exactly ell of the shorter convergent.
  CHECK(stabilization_depth(u, big({3, 7}), big({3, 7, 15}), 30) == 10);
  CHECK(stabilization_depth(u, big({1}), big({1, 2}), 10) == 1);
}

TEST_CASE("irrational series") {
  auto g = StreamingCF::golden();
  const auto r = irrational_series(g, szero_family(), 10);
  CHECK(r.proved);
  CHECK(r.series.coeffs() == oracle::as_rationals({1, 1, -1, 2, -5, 14, -42, 132, -429, 1430, -4862}));
  auto pi = StreamingCF::pi();
  const auto rp = irrational_series(pi, szero_family(), 13);
  CHECK(rp.series.coeffs() == oracle::as_rationals({1, 1, 1, 1, -1, 0, 0, 0, 0, 0, 0, 2, -3, 1}));
  auto pi2 = StreamingCF::pi();
  CHECK_THROWS_AS(irrational_series(pi2, szero_family(), 400), TermsExhaustedError);
  auto e = StreamingCF::e();
  const RingPoly p = RingPoly::variable();
  const auto heuristic = irrational_series(e, PolyParams::make(p, poly({2}), poly({1}), RingPoly()), 8);
  CHECK_FALSE(heuristic.proved);
  CHECK(heuristic.series[0] == 2);
  auto e2 = StreamingCF::e();
  CHECK_THROWS_AS(irrational_series(e2, rzero_family(), 10), StabilizationError);
}

TEST_CASE("sweeps") {
  CHECK(sweep_integrality(szero_family(), 8, 12).holds);
  CHECK(sweep_integrality(rzero_family(), 8, 12).holds);
  CHECK(sweep_defining_equations(szero_family(), 8).holds);
  CHECK(sweep_defining_equations(IntParams::make(2, 3, 1, 1), 8).holds);
  CHECK(sweep_oracle_equivalence(rzero_family(), 8).holds);
  CHECK(sweep_involution(8).holds);
  CHECK(sweep_stabilization(szero_family(), 9, true).holds);
  const auto bound = sweep_stabilization(szero_family(), 9, false);
  CHECK_FALSE(bound.holds);
  CHECK(bound.counterexample->x == "3/2");
  CHECK(sweep_unimodality(szero_family(), 9).tested == 511);
}

TEST_CASE("parallel sweeps match the serial result") {
  const auto serial = sweep_alternation(szero_family(), 10, 16, 0, 1);
  const auto parallel = sweep_alternation(szero_family(), 10, 16, 0, 4);
  CHECK(to_json(serial) == to_json(parallel));
  const auto xs = rationals_up_to_ell(8);
  const auto squares = parallel_map(xs, [](const Rational& x) { return Rational(x * x); }, 3);
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(squares[i] == xs[i] * xs[i]);
  CHECK_THROWS_AS(parallel_map(xs, [](const Rational&) -> int { throw DomainError("x"); }, 2), DomainError);
}

TEST_CASE("report serialization") {
  PropertyReport r;
  r.property = "unimodality";
  r.tested = 3;
  CHECK(to_json(r) == R"({"property":"unimodality","holds":true,"counterexample":null,"tested":3,"notes":[]})");
  r.fail("2", 1, "dip");
  r.fail("5", 4, "ignored");
  const auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["holds"] == false);
  CHECK(j["counterexample"]["x"] == "2");
  CHECK(j["counterexample"]["index"] == 1);
}

TEST_CASE("parity dip checker") {
  std::vector<Rational> c(40, Rational(5));
  for (std::size_t i = 17; i <= 37; i += 2) c[i] = 1;
  CHECK(check_parity_dip(TruncatedSeries(c)).holds);
  c[21] = 9;
  const auto r = check_parity_dip(TruncatedSeries(c));
  CHECK_FALSE(r.holds);
  CHECK(r.counterexample->index == 21);
  CHECK_THROWS_AS(check_parity_dip(TruncatedSeries(std::vector<Rational>(20, Rational(1)))), DomainError);
}

TEST_CASE("printed e display is the series of 2e") {
  const auto display = oracle::as_rationals(refdata::kSeriesE);
  auto e = StreamingCF::e();
  CHECK(irrational_series(e, szero_family(), 39).series.coeffs() != display);
  auto twice = StreamingCF::finite(oracle::multiple_of_e_terms(2));
  CHECK(irrational_series(twice, szero_family(), 39).series.coeffs() == display);
}

TEST_CASE("printed golden display is the series of 89/55") {
  const auto printed = oracle::as_rationals(refdata::kSeriesGoldenPrinted);
  CHECK(deformed_series(szero_family(), Rational(89, 55), 19).coeffs() == printed);
}
