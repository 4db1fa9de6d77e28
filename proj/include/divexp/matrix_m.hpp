#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "divexp/divisor.hpp"
#include "divexp/linear_algebra.hpp"
#include "divexp/symbolic_det.hpp"

namespace divexp {

// Shape of the square system for a degree-e derivation, e = total/2 - 1.
// Rows come in blocks, one per point z3..zn with rows k = 0..m_i - 1; columns
// are the f-block (coefficients of f, degree e - m1) then the g-block
// (coefficients of g, degree e - m2).
struct MatrixMLayout {
  int e = 0;
  std::vector<int> row_blocks;  // m3, ..., mn
  int f_cols = 0;
  int g_cols = 0;

  int size() const { return f_cols + g_cols; }
  // Degree of the top entry of a column, and the exponent whose derivatives
  // fill it (a g-column carries one extra factor z).
  int column_degree(int col) const;
  int column_power(int col) const;
  bool is_g_column(int col) const { return col >= f_cols; }
};

// Throws Precondition unless n >= 3, total is even and e >= m1.
MatrixMLayout matrix_m_layout(const MultiplicityVector& m);

struct SymbolicM {
  PolyMatrix matrix;
  MatrixMLayout layout;
};

SymbolicM build_m_symbolic(const MultiplicityVector& m);
RationalMatrix build_m_evaluated(const MultiplicityVector& m, std::span<const Rational> z);

// det M as a polynomial in z3..zn.
MultiPoly det_d(const MultiplicityVector& m);

// prod_k z_k^m_k * prod_{3<=j<i<=n} (z_j - z_i)^m_i
MultiPoly forced_factor(const MultiplicityVector& m);

// d divided by forced_factor(m). Throws ZeroPolynomial if d vanishes
// identically and NotDivisible if the factorization fails.
MultiPoly reduce_d1(const MultiplicityVector& m);

// det M vanishes at the divisor's z values, i.e. D has a member of degree e.
bool is_degenerate(const PointDivisor& d);
// The degree-e member read off the kernel of M, when degenerate.
std::optional<Derivation> degeneracy_witness(const PointDivisor& d);

struct DivisibilityProbe {
  std::string factor;
  bool divisible = false;
};

struct ScanReport {
  MultiPoly d1;
  // Grid tuples with nonzero, pairwise distinct entries where d1 vanishes.
  std::vector<std::vector<Rational>> degenerate;
  // Zeros of d1 at tuples that do not give n distinct points.
  std::vector<std::vector<Rational>> non_arrangement_zeros;
  std::size_t tuples_checked = 0;
  std::vector<DivisibilityProbe> probes;  // z_i and z_i - z_j
};

ScanReport degeneration_scan(const MultiplicityVector& m, std::span<const Rational> grid);

}  // namespace divexp
