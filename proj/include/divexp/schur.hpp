#pragma once

#include "divexp/divisor.hpp"
#include "divexp/multipoly.hpp"

namespace divexp {

// Rectangle with `height` rows of length `base`, in `nvars` variables.
struct RectPartition {
  int base = 0;
  int height = 0;
  int nvars = 0;
};

// Throws InvalidArgument unless base, height >= 1 and height <= nvars.
void validate(const RectPartition& p);

// Bialternant quotient det(z_i^(lambda_j + nvars - j)) / det(z_i^(nvars - j)).
MultiPoly schur_rectangular(const RectPartition& p);

struct SchurCheck {
  bool match = false;
  int sign = 0;  // d1 = sign * s_lambda when match
  int base = 0;  // 0 means the empty shape, s = 1
  int height = 0;
  MultiPoly d1;
  MultiPoly schur;
};

// For m = (m1, m2, 1, ..., 1) with m1 - m2 < n - 2 < m1 + m2 and even total,
// compares d1 with the Schur polynomial of the rectangle with base
// (m1 + m2 - n)/2 and height (m2 - m1 + n - 2)/2. Throws Precondition otherwise.
SchurCheck schur_identity_check(const MultiplicityVector& m);

}  // namespace divexp
