#pragma once

// Stabilization of deformed convergents, coefficient-property checkers,
// reference sequences and an independent brute-force solver.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "udeform/contfrac.hpp"
#include "udeform/exactnum.hpp"
#include "udeform/udeform.hpp"

namespace udeform {

/// [n] under (p 1; 1 0): 1 + p + ... + p^{n-1}; zero for n = 0.
RingPoly deformed_integer(const BigInt& n);

/// Deformed convergents of [n0, ..., nk] under (p 1; 1 0):
///   R_{j+1} = [n_j] R_j + p^{n_{j-1}} R_{j-1},  (R_0, R_1) = (1, [n0]),
/// and the same for S with (S_0, S_1) = (0, 1). R_{j}/S_{j} is the
/// deformation of [n0, ..., n_{j-1}].
struct ConvergentPolys {
  std::vector<BigInt> terms;
  std::vector<RingPoly> R;
  std::vector<RingPoly> S;

  std::size_t size() const noexcept { return R.size(); }
  RationalFunction quotient(std::size_t j) const;
  /// R_j S_{j-1} - S_j R_{j-1}, for j >= 1.
  RingPoly determinant(std::size_t j) const;
  /// (-1)^j p^{n0 + ... + n_{j-2}}.
  RingPoly expected_determinant(std::size_t j) const;
};

/// Requires at least one term.
ConvergentPolys convergent_polys(std::span<const BigInt> terms);

struct Counterexample {
  std::string x;
  std::int64_t index = -1;
  std::string detail;
};

struct PropertyReport {
  std::string property;
  bool holds = true;
  std::optional<Counterexample> counterexample;
  std::size_t tested = 0;
  std::vector<std::string> notes;

  void fail(std::string x, std::int64_t index, std::string detail);
};

/// {"property", "holds", "counterexample": {"x", "index", "detail"} | null,
///  "tested", "notes"} with keys in that order.
std::string to_json(const PropertyReport& report, int indent = -1);

/// Non-strict rise then non-strict fall. The failing index is where a rise
/// follows a descent. Throws DomainError on a negative coefficient or zero.
PropertyReport check_unimodality(const RingPoly& poly);

/// a_i >= a_{i+1} for even i, a_i <= a_{i+1} for odd i, over the pairs with
/// i >= from_index.
PropertyReport check_anti_unimodality(const RingPoly& poly, std::size_t from_index = 0);

/// Nonzero coefficients from `from_index` on must alternate strictly in sign.
/// Zero coefficients are skipped and listed in the notes.
PropertyReport check_sign_alternation(const TruncatedSeries& s, std::size_t from_index = 0);

struct ReferenceSequence {
  std::string name;
  std::string oeis;
  std::vector<BigInt> terms;
};

const ReferenceSequence& catalan_numbers();
const ReferenceSequence& generalized_catalan_numbers();
const ReferenceSequence& fibonacci_numbers();

/// Compares c_i with sign * ref[i - shift] for from <= i <= order. With
/// `alternating` the sign starts at `first_sign` and flips at every index;
/// otherwise it stays at `first_sign`. Throws DomainError when the reference
/// is too short.
PropertyReport match_reference(const TruncatedSeries& s, const ReferenceSequence& ref, bool alternating,
                               std::size_t from = 0, std::size_t shift = 0, int first_sign = 1);

/// All positive rationals with ell <= max_ell, level by level, each once.
/// Children of y are 1 + y and y / (1 + y).
std::vector<Rational> rationals_up_to_ell(std::size_t max_ell);

/// Solves the defining equations by breadth-first generation from f(1) = 1:
///   f(1 + y) = p f(y) + q f(1/y),      f(1/(1 + y)) = s f(y) + r f(1/y),
///   f(y/(1 + y)) = r f(y) + s f(1/y),  f((1 + y)/y) = q f(y) + p f(1/y).
/// Does not use continued fractions.
template <CoefficientDomain T>
std::map<Rational, FPair<T>> bfs_oracle(const UParams<T>& u, std::size_t max_ell) {
  if (max_ell < 1) throw DomainError("bfs_oracle needs max_ell >= 1");
  std::map<Rational, FPair<T>> table;
  std::vector<std::pair<Rational, FPair<T>>> level{
      {Rational(1), FPair<T>{coefficient_traits<T>::one(), coefficient_traits<T>::one()}}};
  for (std::size_t l = 1; l <= max_ell; ++l) {
    std::vector<std::pair<Rational, FPair<T>>> next;
    next.reserve(level.size() * 2);
    for (auto& [y, v] : level) {
      if (l < max_ell) {
        const T& fy = v.fx;
        const T& finv = v.finv;
        next.emplace_back(Rational(1 + y), FPair<T>{u.p() * fy + u.q() * finv, u.s() * fy + u.r() * finv});
        next.emplace_back(Rational(y / (1 + y)), FPair<T>{u.r() * fy + u.s() * finv, u.q() * fy + u.p() * finv});
      }
      table.emplace(std::move(y), std::move(v));
    }
    level = std::move(next);
  }
  return table;
}

/// Series of f_U(x) / f_U(1/x) to `order`, expanded without reduction.
TruncatedSeries deformed_series(const PolyParams& u, std::span<const BigInt> terms, std::size_t order);
TruncatedSeries deformed_series(const PolyParams& u, const Rational& x, std::size_t order);

/// Length of the common Taylor prefix of the deformations of two
/// expansions, capped at order + 1.
std::size_t stabilization_depth(const PolyParams& u, std::span<const BigInt> a, std::span<const BigInt> b,
                                std::size_t order);

struct IrrationalSeries {
  TruncatedSeries series;
  /// (p 1; 1 0) with x >= 1, the case the stabilization argument covers.
  bool proved = false;
  std::size_t terms_used = 0;
};

/// Coefficients c_0..c_N of the deformation of an irrational given by its
/// expansion. Terms are pulled until the penultimate convergent has
/// ell >= N + 1, then one more; the last two convergents must agree on all
/// N + 1 coefficients or StabilizationError is thrown with both series.
IrrationalSeries irrational_series(StreamingCF& src, const PolyParams& u, std::size_t order);

/// Maps fn over inputs on `jobs` threads; results keep the input order. The
/// first exception thrown by any worker is rethrown.
template <typename In, typename Fn>
auto parallel_map(const std::vector<In>& inputs, Fn fn, unsigned jobs) {
  using Out = std::invoke_result_t<Fn&, const In&>;
  std::vector<std::optional<Out>> slots(inputs.size());
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(inputs.size(), 1))));
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < inputs.size(); i += jobs) slots[i].emplace(fn(inputs[i]));
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Out> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

// Sweeps over every rational with ell <= max_ell. The first failure in input
// order becomes the counterexample.

struct Finding {
  std::int64_t index = -1;
  std::string detail;
};

using Probe = std::function<std::optional<Finding>(const Rational&)>;

PropertyReport run_sweep(std::string property, std::size_t max_ell, const Probe& probe, unsigned jobs = 1);

template <CoefficientDomain T>
PropertyReport sweep_defining_equations(const UParams<T>& u, std::size_t max_ell, unsigned jobs = 1) {
  auto probe = [&u](const Rational& x) -> std::optional<Finding> {
    const auto v = f_pair(u, x);
    const T shifted = f_pair(u, Rational(1 + x)).fx;
    const T contracted = f_pair(u, Rational(x / (1 + x))).fx;
    if (shifted != u.p() * v.fx + u.q() * v.finv) return Finding{0, "f(1+x) != p f(x) + q f(1/x)"};
    if (contracted != u.r() * v.fx + u.s() * v.finv) return Finding{1, "f(x/(1+x)) != r f(x) + s f(1/x)"};
    if (v.finv != f_pair(u, Rational(1 / x)).fx) return Finding{2, "pair component f(1/x) inconsistent"};
    return std::nullopt;
  };
  auto report = run_sweep("defining-equations", max_ell, probe, jobs);
  if (f_pair(u, Rational(1)).fx != coefficient_traits<T>::one()) report.fail("1", 0, "f(1) != 1");
  return report;
}

template <CoefficientDomain T>
PropertyReport sweep_oracle_equivalence(const UParams<T>& u, std::size_t max_ell, unsigned jobs = 1) {
  const auto table = bfs_oracle(u, max_ell);
  auto probe = [&](const Rational& x) -> std::optional<Finding> {
    const auto it = table.find(x);
    if (it == table.end()) return Finding{-1, "missing from oracle table"};
    if (it->second != f_pair(u, x)) return Finding{-1, "oracle and recursion differ"};
    return std::nullopt;
  };
  auto report = run_sweep("oracle-equivalence", max_ell, probe, jobs);
  const std::size_t expected = (std::size_t{1} << max_ell) - 1;
  if (table.size() != expected) {
    report.fail("", -1, "oracle table has " + std::to_string(table.size()) + " entries, expected " +
                            std::to_string(expected));
  }
  return report;
}

/// Series of every deformation to `order` has integer coefficients.
PropertyReport sweep_integrality(const PolyParams& u, std::size_t max_ell, std::size_t order, unsigned jobs = 1);
PropertyReport sweep_unimodality(const PolyParams& u, std::size_t max_ell, unsigned jobs = 1);
PropertyReport sweep_anti_unimodality(const PolyParams& u, std::size_t max_ell, std::size_t from_index = 0,
                                      unsigned jobs = 1);
PropertyReport sweep_alternation(const PolyParams& u, std::size_t max_ell, std::size_t order,
                                 std::size_t from_index = 0, unsigned jobs = 1);
/// For x >= 1 with at least two terms, compares x with its previous
/// convergent. With `sharp` the depth must equal ell of the previous
/// convergent; otherwise it must reach n0 + ... + nk - 1.
PropertyReport sweep_stabilization(const PolyParams& u, std::size_t max_ell, bool sharp, unsigned jobs = 1);
/// J(J(x)) = x, and the rewritten expansion evaluates to the quotient.
PropertyReport sweep_involution(std::size_t max_ell, unsigned jobs = 1);

/// |c_i| < max(|c_{i-1}|, |c_{i+1}|) for i = first, first + 2, ..., last.
/// Throws DomainError when the series is shorter than last + 1.
PropertyReport check_parity_dip(const TruncatedSeries& s, std::size_t first = 17, std::size_t last = 37);

}  // namespace udeform
