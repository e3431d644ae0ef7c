#include "udeform/qdeform.hpp"

#include "udeform/errors.hpp"

namespace udeform {

namespace {

RingPoly all_ones(std::uint64_t a) { return RingPoly(std::vector<BigInt>(a, BigInt(1))); }

}  // namespace

RationalFunction q_int(std::int64_t a, bool inverse) {
  if (a < 0) throw DomainError("q-integer of a negative number");
  if (a == 0) return RationalFunction();
  const auto n = static_cast<std::uint64_t>(a);
  if (!inverse) return RationalFunction(all_ones(n));
  return RationalFunction::normalize(all_ones(n), RingPoly::monomial(1, n - 1));
}

std::vector<BigInt> even_length_terms(std::span<const BigInt> terms) {
  std::vector<BigInt> t(terms.begin(), terms.end());
  if (t.size() % 2 == 1 && !(t.size() == 1 && t[0] == 1)) {
    t.back() -= 1;
    t.emplace_back(1);
  }
  return t;
}

QDeformed q_deform(std::span<const BigInt> terms) {
  validate_terms(terms);
  QDeformed out{RationalFunction(), even_length_terms(terms)};
  const auto& t = out.even_terms;
  if (t.size() == 1) {
    out.value = RationalFunction(RingPoly::constant(1));
    return out;
  }
  // Level i uses q on even i and q^{-1} on odd i.
  auto level_base = [&](std::size_t i) {
    return q_int(static_cast<std::int64_t>(to_count(t[i])), i % 2 == 1);
  };
  auto level_numerator = [&](std::size_t i) {
    const RingPoly qa = RingPoly::monomial(1, to_count(t[i]));
    return i % 2 == 0 ? RationalFunction(qa) : RationalFunction::normalize(RingPoly::constant(1), qa);
  };
  RationalFunction value = level_base(t.size() - 1);
  for (std::size_t i = t.size() - 1; i-- > 0;) {
    value = level_base(i) + level_numerator(i) / value;
  }
  out.value = std::move(value);
  return out;
}

QDeformed q_deform(const CFExpansion& cf) { return q_deform(std::span<const BigInt>(cf.terms())); }

TruncatedSeries q_deform_series(const CFExpansion& cf, std::size_t order) {
  return series_of_ratfun(q_deform(cf).value, order);
}

QStabilization q_deform_series(StreamingCF& src, std::size_t order, std::size_t max_terms) {
  std::vector<BigInt> terms;
  BigInt running = 0;
  // Start once the prefix carries order + 1 units of ell, then keep adding
  // terms until two consecutive convergents agree.
  while (running < order + 1) {
    terms.push_back(src.next());
    running += terms.back();
  }
  TruncatedSeries prev = series_of_ratfun(q_deform(std::span<const BigInt>(terms)).value, order);
  while (terms.size() < max_terms) {
    terms.push_back(src.next());
    TruncatedSeries cur = series_of_ratfun(q_deform(std::span<const BigInt>(terms)).value, order);
    if (cur == prev) return {std::move(cur), terms.size()};
    prev = std::move(cur);
  }
  throw StabilizationError("q-series did not stabilize within " + std::to_string(max_terms) + " terms");
}

}  // namespace udeform
