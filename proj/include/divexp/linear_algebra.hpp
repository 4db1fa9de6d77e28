#pragma once

#include <cstddef>
#include <vector>

#include "divexp/matrix.hpp"
#include "divexp/rational.hpp"

namespace divexp {

using RationalMatrix = Matrix<Rational>;
using RationalVector = std::vector<Rational>;

struct EchelonForm {
  RationalMatrix reduced;             // reduced row echelon form
  std::vector<std::size_t> pivots;    // pivot column of each nonzero row
};

EchelonForm rref(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);

// Basis of the right kernel, one vector per free column, with that free
// coordinate equal to 1 and the other free coordinates 0. Ordered by free
// column index, so the output is fully determined by the matrix.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

Rational determinant(RationalMatrix m);

RationalVector multiply(const RationalMatrix& m, const RationalVector& v);

}  // namespace divexp
