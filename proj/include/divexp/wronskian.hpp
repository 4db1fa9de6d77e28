#pragma once

#include <span>

#include "divexp/multipoly.hpp"

namespace divexp {

struct WronskianMonomial {
  int degree;
  Integer coefficient;
};

// Closed form for the Wronskian of x^l1, ..., x^lk with l strictly
// decreasing: a single monomial of degree sum(l) - k(k-1)/2 and coefficient
// (-1)^floor(k/2) * prod_{i<j} (l_i - l_j).
WronskianMonomial wronskian_closed_form(std::span<const int> lambda);

// The same Wronskian computed as a literal k x k determinant of derivatives,
// returned as a polynomial in one variable x.
MultiPoly wronskian_symbolic(std::span<const int> lambda);

// Closed-form coefficient for exponents in any order: zero on a repeated
// exponent, otherwise the sorted coefficient times the sorting sign.
Integer wronskian_coefficient_any_order(std::span<const int> lambda);

}  // namespace divexp
