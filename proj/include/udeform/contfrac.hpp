#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "udeform/scalar.hpp"

namespace udeform {

/// Finite simple continued fraction [n0, n1, ..., nk] of a positive rational.
///
/// Canonical form: n0 >= 0, ni >= 1 for i >= 1, nk >= 2 whenever k >= 1.
/// The only expansion ending in 1 is [1] itself, and n0 == 0 exactly when the
/// value is below 1.
class CFExpansion {
 public:
  /// Validates canonical form; throws DomainError otherwise.
  explicit CFExpansion(std::vector<BigInt> terms);
  CFExpansion(std::initializer_list<long long> terms);

  /// Accepts any term list denoting a positive rational (interior zeros and a
  /// trailing 1 allowed) and rewrites it to canonical form using
  /// [.., a, 0, b, ..] = [.., a+b, ..] and [.., a, 1] = [.., a+1].
  static CFExpansion canonicalize(std::vector<BigInt> terms);

  const std::vector<BigInt>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Sum of all partial quotients.
  BigInt ell() const;
  Rational value() const;

  friend bool operator==(const CFExpansion&, const CFExpansion&) = default;

 private:
  std::vector<BigInt> terms_;
};

/// Euclidean algorithm; throws DomainError("domain is Q+") for x <= 0.
CFExpansion cf_expand(const Rational& x);
Rational cf_value(const CFExpansion& cf);
/// Value of an arbitrary term list (no canonical-form requirement beyond
/// n0 >= 0 and positive later terms).
Rational cf_value(std::span<const BigInt> terms);
BigInt ell(const Rational& x);

/// Checks n0 >= 0 and ni >= 1 (i >= 1) and that the value is positive;
/// throws DomainError otherwise. Trailing 1s are allowed.
void validate_terms(std::span<const BigInt> terms);

/// The involution J written directly on the expansion:
///   [1_{n0-1}, 2, 1_{n1-2}, 2, ..., 2, 1_{nk-1}]
/// with 1_0 dropped and [.., a, 1_{-1}, b, ..] = [.., a+b-1, ..].
/// Inputs below 1 go through J(1/x) = 1/J(x). Requires at least two terms
/// (and, for x < 1, at least two terms in 1/x); throws DomainError otherwise.
CFExpansion j_rewrite(const CFExpansion& cf);
/// The rewritten term list before re-canonicalization (may end in 1).
std::vector<BigInt> j_rewrite_raw(const CFExpansion& cf);

/// "[2,1,2,1,1,4]". Parsing accepts optional spaces and a ';' after n0.
std::string format_cf(std::span<const BigInt> terms);
std::vector<BigInt> parse_cf(std::string_view text);

/// Partial quotients of pi as embedded reference data.
inline constexpr std::array<int, 22> kPiTerms = {3, 7, 15, 1, 292, 1, 1, 1, 2, 1, 3,
                                                 1, 14, 2, 1,  1,   2, 2, 2, 2, 1, 84};

/// On-demand source of partial quotients. A single instance is stateful and
/// must not be shared between threads; copies are independent.
class StreamingCF {
 public:
  enum class Kind { e_pattern, embedded_pi, periodic, finite };

  /// e = [2, 1, 2, 1, 1, 4, 1, 1, 6, ...].
  static StreamingCF e();
  /// The 22 stored terms of pi, then TermsExhaustedError.
  static StreamingCF pi();
  /// [1, 1, 1, ...].
  static StreamingCF golden();
  /// preperiod followed by period repeated forever; period must be non-empty.
  static StreamingCF periodic(std::vector<BigInt> preperiod, std::vector<BigInt> period);
  static StreamingCF finite(std::vector<BigInt> terms);

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t position() const noexcept { return pos_; }
  bool exhausted() const noexcept;

  /// Throws TermsExhaustedError("CF terms exhausted").
  BigInt next();
  std::vector<BigInt> take(std::size_t count);

 private:
  StreamingCF(Kind kind, std::string name, std::vector<BigInt> head, std::vector<BigInt> period);

  Kind kind_;
  std::string name_;
  std::vector<BigInt> head_;
  std::vector<BigInt> period_;
  std::size_t pos_ = 0;
};

/// [n0], [n0, n1], ..., the first `count` convergents drawn from `src`.
std::vector<Rational> convergents(StreamingCF& src, std::size_t count);

}  // namespace udeform
