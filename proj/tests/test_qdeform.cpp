#include <doctest.h>

#include "oracles.hpp"
#include "reference_values.hpp"
#include "udeform/analysis.hpp"
#include "udeform/errors.hpp"
#include "udeform/qdeform.hpp"

using namespace udeform;
using oracle::poly;

TEST_CASE("q-integers") {
  CHECK(q_int(2) == RationalFunction(poly({1, 1})));
  CHECK(q_int(1) == RationalFunction(poly({1})));
  CHECK(q_int(0) == RationalFunction());
  CHECK(q_int(3, true) == RationalFunction::normalize(poly({1, 1, 1}), poly({0, 0, 1})));
  for (std::int64_t a = 1; a < 12; ++a) {
    CHECK(q_int(a).evaluate(Rational(1)) == Rational(a));
    CHECK(q_int(a, true) == q_int(a) / RationalFunction(RingPoly::monomial(1, static_cast<std::size_t>(a - 1))));
  }
  CHECK_THROWS_AS(q_int(-1), DomainError);
}

TEST_CASE("even-length rewrite") {
  const std::vector<BigInt> odd{1, 2, 2};
  CHECK(even_length_terms(odd) == std::vector<BigInt>{1, 2, 1, 1});
  const std::vector<BigInt> even{1, 3};
  CHECK(even_length_terms(even) == even);
  const std::vector<BigInt> one{1};
  CHECK(even_length_terms(one) == one);
}

TEST_CASE("q-deformed rationals") {
  CHECK(q_deform(cf_expand(Rational(7, 5))).value ==
        RationalFunction::normalize(poly({1, 1, 2, 2, 1}), poly({1, 1, 2, 1})));
  CHECK(q_deform(cf_expand(Rational(1))).value == RationalFunction(poly({1})));
  CHECK(q_deform(cf_expand(Rational(2))).value == RationalFunction(poly({1, 1})));
}

TEST_CASE("tower agrees with the matrix product and specializes to x") {
  for (const auto& x : rationals_up_to_ell(11)) {
    if (x == 1) continue;
    const auto cf = cf_expand(x);
    const auto qd = q_deform(cf);
    REQUIRE(qd.value == oracle::mgo_matrix(qd.even_terms));
    REQUIRE(qd.value.evaluate(Rational(1)) == x);
    // Deforming the even-length list directly gives the same function.
    REQUIRE(q_deform(std::span<const BigInt>(qd.even_terms)).value == qd.value);
  }
}

TEST_CASE("q-series of 7/5") {
  const auto s = q_deform_series(cf_expand(Rational(7, 5)), 12);
  CHECK(s.coeffs() == oracle::as_rationals(refdata::kQSeries7_5));
  CHECK(q_deform_series(cf_expand(Rational(1)), 5).coeffs() == oracle::as_rationals({1, 0, 0, 0, 0, 0}));
}

TEST_CASE("golden q-series is signed generalized Catalan") {
  auto src = StreamingCF::golden();
  const auto r = q_deform_series(src, 20);
  CHECK(r.series.coeffs() == oracle::as_rationals(refdata::kQSeriesGolden));
  const auto a = oracle::generalized_catalan(25);
  for (std::size_t n = 2; n <= 20; ++n) {
    const BigInt expected = (n % 2 == 0 ? 1 : -1) * a[n - 1];
    CHECK(r.series[n] == Rational(expected));
  }
}

TEST_CASE("q-series of a finite source exhausts") {
  auto src = StreamingCF::finite({1, 2});
  CHECK_THROWS_AS(q_deform_series(src, 10), TermsExhaustedError);
}
