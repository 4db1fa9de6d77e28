#pragma once

#include "divexp/matrix.hpp"
#include "divexp/multipoly.hpp"

namespace divexp {

using PolyMatrix = Matrix<MultiPoly>;

// Recursive first-row expansion. Exponential; meant for small matrices.
MultiPoly det_cofactor(const PolyMatrix& m);

// Fraction-free (Bareiss) elimination. Every division is exact in the
// polynomial ring; a zero pivot is replaced by the first nonzero entry below it.
MultiPoly det_bareiss(PolyMatrix m);

// Cofactor expansion up to 4x4, Bareiss above. Throws NotSquare.
MultiPoly det_fraction_free(const PolyMatrix& m);

}  // namespace divexp
