#include "divexp/linear_algebra.hpp"

#include <algorithm>

namespace divexp {

EchelonForm rref(RationalMatrix m) {
  EchelonForm out;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t r = pivot_row;
    while (r < m.rows() && m(r, col) == 0) ++r;
    if (r == m.rows()) continue;
    m.swap_rows(r, pivot_row);

    const Rational inv = 1 / m(pivot_row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(pivot_row, c) *= inv;

    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(i, c) -= factor * m(pivot_row, c);
    }
    out.pivots.push_back(col);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  const EchelonForm ef = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : ef.pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) v[ef.pivots[r]] = -ef.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(RationalMatrix m) {
  require(m.is_square(), ErrorCode::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && m(r, k) == 0) ++r;
    if (r == n) return 0;
    if (r != k) {
      m.swap_rows(r, k);
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational factor = m(i, k) / m(k, k);
      for (std::size_t c = k; c < n; ++c) m(i, c) -= factor * m(k, c);
    }
  }
  return det;
}

RationalVector multiply(const RationalMatrix& m, const RationalVector& v) {
  require(v.size() == m.cols(), ErrorCode::InvalidArgument, "vector length mismatch");
  RationalVector out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

}  // namespace divexp
