#include "udeform/contfrac.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <utility>

#include "udeform/errors.hpp"

namespace udeform {

namespace {

void check_canonical(const std::vector<BigInt>& t) {
  if (t.empty()) throw DomainError("empty continued fraction");
  if (t[0] < 0) throw DomainError("leading term must be >= 0");
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i] < 1) throw DomainError("partial quotients after the first must be >= 1");
  }
  if (t.size() == 1 && t[0] == 0) throw DomainError("domain is Q+");
  if (t.size() >= 2 && t.back() < 2) throw DomainError("non-canonical expansion: last term must be >= 2");
}

}  // namespace

CFExpansion::CFExpansion(std::vector<BigInt> terms) : terms_(std::move(terms)) { check_canonical(terms_); }

CFExpansion::CFExpansion(std::initializer_list<long long> terms) {
  for (long long t : terms) terms_.emplace_back(t);
  check_canonical(terms_);
}

CFExpansion CFExpansion::canonicalize(std::vector<BigInt> terms) {
  if (terms.empty()) throw DomainError("empty continued fraction");
  if (terms[0] < 0) throw DomainError("leading term must be >= 0");
  std::vector<BigInt> out;
  out.reserve(terms.size());
  out.push_back(terms[0]);
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i] < 0) throw DomainError("negative partial quotient");
    if (terms[i] == 0) {
      // [.., a, 0, b, ..] = [.., a + b, ..]
      if (i + 1 >= terms.size()) throw DomainError("continued fraction ends in 0");
      out.back() += terms[i + 1];
      ++i;
      continue;
    }
    out.push_back(terms[i]);
  }
  while (out.size() >= 2 && out.back() == 1) {
    out.pop_back();
    out.back() += 1;
  }
  return CFExpansion(std::move(out));
}

BigInt CFExpansion::ell() const {
  BigInt s = 0;
  for (const auto& t : terms_) s += t;
  return s;
}

Rational CFExpansion::value() const { return cf_value(std::span<const BigInt>(terms_)); }

void validate_terms(std::span<const BigInt> terms) {
  if (terms.empty()) throw DomainError("empty continued fraction");
  if (terms[0] < 0) throw DomainError("leading term must be >= 0");
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i] < 1) throw DomainError("partial quotients after the first must be >= 1");
  }
  if (terms.size() == 1 && terms[0] == 0) throw DomainError("domain is Q+");
}

CFExpansion cf_expand(const Rational& x) {
  if (x <= 0) throw DomainError("domain is Q+");
  BigInt a = numerator_of(x);
  BigInt b = denominator_of(x);
  std::vector<BigInt> terms;
  while (b != 0) {
    BigInt q = a / b;
    BigInt r = a - q * b;
    terms.push_back(std::move(q));
    a = std::move(b);
    b = std::move(r);
  }
  return CFExpansion(std::move(terms));
}

Rational cf_value(std::span<const BigInt> terms) {
  validate_terms(terms);
  // Forward convergent recurrence: h_k = n_k h_{k-1} + h_{k-2}.
  BigInt h_prev = 1, h = terms[0];
  BigInt k_prev = 0, k = 1;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    BigInt h_next = terms[i] * h + h_prev;
    BigInt k_next = terms[i] * k + k_prev;
    h_prev = std::move(h);
    h = std::move(h_next);
    k_prev = std::move(k);
    k = std::move(k_next);
  }
  return Rational(h, k);
}

Rational cf_value(const CFExpansion& cf) { return cf.value(); }

BigInt ell(const Rational& x) { return cf_expand(x).ell(); }

namespace {

// Assumes n0 >= 1 and at least two terms.
std::vector<BigInt> rewrite_from_above(const std::vector<BigInt>& n) {
  const std::size_t k = n.size() - 1;
  std::vector<BigInt> out;
  bool pending_merge = false;

  auto emit_block = [&](const BigInt& len) {
    if (len == -1) {
      pending_merge = true;
      return;
    }
    const auto count = to_count(len);
    out.insert(out.end(), count, BigInt(1));
  };
  auto emit_two = [&] {
    if (pending_merge) {
      // [.., a, 1_{-1}, 2, ..] = [.., a + 1, ..]
      out.back() += 1;
      pending_merge = false;
    } else {
      out.emplace_back(2);
    }
  };

  emit_block(n[0] - 1);
  for (std::size_t i = 1; i <= k; ++i) {
    emit_two();
    emit_block(i == k ? BigInt(n[i] - 1) : BigInt(n[i] - 2));
  }
  return out;
}

std::vector<BigInt> reciprocal_terms(std::vector<BigInt> t) {
  if (t.front() == 0) {
    t.erase(t.begin());
  } else {
    t.insert(t.begin(), BigInt(0));
  }
  return t;
}

}  // namespace

std::vector<BigInt> j_rewrite_raw(const CFExpansion& cf) {
  const auto& n = cf.terms();
  if (n.size() < 2) throw DomainError("j_rewrite needs at least two terms; use the codenominator quotient");
  if (n[0] >= 1) return rewrite_from_above(n);
  // x < 1: J(x) = 1 / J(1/x), and 1/x = [n1, ..., nk].
  std::vector<BigInt> inv(n.begin() + 1, n.end());
  if (inv.size() < 2) throw DomainError("j_rewrite of 1/n needs J(n); use the codenominator quotient");
  return reciprocal_terms(rewrite_from_above(inv));
}

CFExpansion j_rewrite(const CFExpansion& cf) { return CFExpansion::canonicalize(j_rewrite_raw(cf)); }

std::string format_cf(std::span<const BigInt> terms) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out << ',';
    out << terms[i];
  }
  out << ']';
  return out.str();
}

std::vector<BigInt> parse_cf(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw ParseError("continued fraction must look like [n0,n1,...]: '" + std::string(text) + "'");
  }
  s = s.substr(1, s.size() - 2);
  std::vector<BigInt> terms;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find_first_of(",;", start);
    if (end == std::string::npos) end = s.size();
    terms.push_back(parse_bigint(s.substr(start, end - start)));
    start = end + 1;
  }
  validate_terms(terms);
  return terms;
}

// Streaming sources ---------------------------------------------------------

StreamingCF::StreamingCF(Kind kind, std::string name, std::vector<BigInt> head, std::vector<BigInt> period)
    : kind_(kind), name_(std::move(name)), head_(std::move(head)), period_(std::move(period)) {}

StreamingCF StreamingCF::e() { return StreamingCF(Kind::e_pattern, "e", {}, {}); }

StreamingCF StreamingCF::pi() {
  std::vector<BigInt> t(kPiTerms.begin(), kPiTerms.end());
  return StreamingCF(Kind::embedded_pi, "pi", std::move(t), {});
}

StreamingCF StreamingCF::golden() { return periodic({}, {BigInt(1)}); }

StreamingCF StreamingCF::periodic(std::vector<BigInt> preperiod, std::vector<BigInt> period) {
  if (period.empty()) throw DomainError("periodic continued fraction needs a non-empty period");
  std::vector<BigInt> all(preperiod);
  all.insert(all.end(), period.begin(), period.end());
  validate_terms(all);
  std::string name = format_cf(preperiod) + "+" + format_cf(period) + "*";
  if (preperiod.empty() && period.size() == 1 && period[0] == 1) name = "golden";
  return StreamingCF(Kind::periodic, std::move(name), std::move(preperiod), std::move(period));
}

StreamingCF StreamingCF::finite(std::vector<BigInt> terms) {
  validate_terms(terms);
  std::string name = format_cf(terms);
  return StreamingCF(Kind::finite, std::move(name), std::move(terms), {});
}

bool StreamingCF::exhausted() const noexcept {
  switch (kind_) {
    case Kind::embedded_pi:
    case Kind::finite:
      return pos_ >= head_.size();
    default:
      return false;
  }
}

BigInt StreamingCF::next() {
  const std::size_t i = pos_;
  switch (kind_) {
    case Kind::e_pattern: {
      ++pos_;
      if (i == 0) return 2;
      const std::size_t j = i - 1;
      if (j % 3 == 1) return BigInt(2 * (j / 3 + 1));
      return 1;
    }
    case Kind::embedded_pi:
    case Kind::finite:
      if (i >= head_.size()) throw TermsExhaustedError("CF terms exhausted");
      ++pos_;
      return head_[i];
    case Kind::periodic:
      ++pos_;
      if (i < head_.size()) return head_[i];
      return period_[(i - head_.size()) % period_.size()];
  }
  throw std::logic_error("unreachable");
}

std::vector<BigInt> StreamingCF::take(std::size_t count) {
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(next());
  return out;
}

std::vector<Rational> convergents(StreamingCF& src, std::size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  BigInt h_prev = 1, h = 0;
  BigInt k_prev = 0, k = 1;
  for (std::size_t i = 0; i < count; ++i) {
    const BigInt n = src.next();
    if (i == 0) {
      h = n;
    } else {
      BigInt h_next = n * h + h_prev;
      BigInt k_next = n * k + k_prev;
      h_prev = std::move(h);
      h = std::move(h_next);
      k_prev = std::move(k);
      k = std::move(k_next);
    }
    out.emplace_back(h, k);
  }
  return out;
}

}  // namespace udeform
