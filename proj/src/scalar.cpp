#include "udeform/scalar.hpp"

#include <cctype>
#include <stdexcept>

#include "udeform/errors.hpp"

namespace udeform {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  text = strip(text);
  if (!is_integer_literal(text)) throw ParseError("not an integer: '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return BigInt(std::string(text));
}

Rational parse_rational(std::string_view text) {
  text = strip(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  const BigInt num = parse_bigint(text.substr(0, slash));
  const BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& x) {
  const BigInt den = denominator_of(x);
  if (den == 1) return numerator_of(x).str();
  return numerator_of(x).str() + "/" + den.str();
}

std::uint64_t to_count(const BigInt& n, std::uint64_t limit) {
  if (n < 0 || n > limit) {
    throw std::length_error("count " + n.str() + " outside [0, " + std::to_string(limit) + "]");
  }
  return n.convert_to<std::uint64_t>();
}

}  // namespace udeform
