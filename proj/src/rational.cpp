#include "divexp/rational.hpp"

#include <cctype>

#include "divexp/error.hpp"

namespace divexp {

Rational make_rational(const Integer& num, const Integer& den) {
  require(den != 0, ErrorCode::DivisionByZero, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) ||
      (!den.empty() && den.front() == '-'))
    fail(ErrorCode::InvalidArgument, "not a rational literal: '" + std::string(text) + "'");
  return make_rational(parse_integer(num), parse_integer(den));
}

Integer factorial(int k) {
  Integer r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

Integer falling_factorial(int n, int k) {
  Integer r = 1;
  for (int i = 0; i < k; ++i) r *= (n - i);
  return r;
}

Rational pow(const Rational& base, int exponent) {
  require(exponent >= 0, ErrorCode::InvalidArgument, "negative exponent");
  Rational result = 1;
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

}  // namespace divexp
