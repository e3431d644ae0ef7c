#pragma once

// Morier-Genoud--Ovsienko q-deformed rationals, for comparison with the
// U-deformation. Everything is exact over rational functions in q.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "udeform/contfrac.hpp"
#include "udeform/exactnum.hpp"

namespace udeform {

/// [a]_q = 1 + q + ... + q^{a-1}; with `inverse`, [a]_{q^{-1}} cleared to
/// (1 + q + ... + q^{a-1}) / q^{a-1}. Throws DomainError for a < 0.
RationalFunction q_int(std::int64_t a, bool inverse = false);

struct QDeformed {
  RationalFunction value;
  /// The even-length term list the tower was evaluated on.
  std::vector<BigInt> even_terms;
};

/// Rewrites an odd-length expansion as [..., n_k - 1, 1]; even lists and [1]
/// pass through unchanged.
std::vector<BigInt> even_length_terms(std::span<const BigInt> terms);

/// The alternating tower
///   [a1]_q + q^{a1} / ([a2]_{q^-1} + q^{-a2} / ([a3]_q + q^{a3} / (...)))
/// evaluated bottom-up on the even-length form of `terms`.
QDeformed q_deform(std::span<const BigInt> terms);
QDeformed q_deform(const CFExpansion& cf);

TruncatedSeries q_deform_series(const CFExpansion& cf, std::size_t order);

struct QStabilization {
  TruncatedSeries series;
  std::size_t terms_used = 0;
};

/// Series of the q-deformed limit of a streaming expansion: convergents are
/// extended until two consecutive ones agree on the first order+1
/// coefficients. Throws StabilizationError when `max_terms` is reached first,
/// TermsExhaustedError when the source runs dry.
QStabilization q_deform_series(StreamingCF& src, std::size_t order, std::size_t max_terms = 4096);

}  // namespace udeform
