#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace divexp {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "-p", "p/q". Throws Error(InvalidArgument) on anything else or
// on a zero denominator.
Rational parse_rational(std::string_view text);

Integer factorial(int k);
// k-th falling factorial of n: n (n-1) ... (n-k+1); zero once the product
// passes through zero (n < k, n >= 0).
Integer falling_factorial(int n, int k);

Rational pow(const Rational& base, int exponent);

}  // namespace divexp
