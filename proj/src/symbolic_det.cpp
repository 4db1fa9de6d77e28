#include "divexp/symbolic_det.hpp"

#include <vector>

namespace divexp {

namespace {

std::size_t nvars_of(const PolyMatrix& m) {
  std::size_t n = 0;
  for (const auto& e : m.entries()) n = std::max(n, e.nvars());
  return n;
}

MultiPoly cofactor_rec(const PolyMatrix& m, std::vector<std::size_t>& rows_left,
                       std::size_t nvars) {
  if (rows_left.empty()) return MultiPoly::constant(nvars, 1);
  // Expand along the first remaining column; rows_left holds the live rows.
  const std::size_t col = m.cols() - rows_left.size();
  MultiPoly sum(nvars);
  for (std::size_t i = 0; i < rows_left.size(); ++i) {
    const std::size_t r = rows_left[i];
    if (m(r, col).is_zero()) continue;
    rows_left.erase(rows_left.begin() + static_cast<std::ptrdiff_t>(i));
    MultiPoly minor = cofactor_rec(m, rows_left, nvars);
    rows_left.insert(rows_left.begin() + static_cast<std::ptrdiff_t>(i), r);
    if (minor.is_zero()) continue;
    MultiPoly term = m(r, col) * minor;
    if (i % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

}  // namespace

MultiPoly det_cofactor(const PolyMatrix& m) {
  require(m.is_square(), ErrorCode::NotSquare, "determinant of a non-square matrix");
  std::vector<std::size_t> rows(m.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return cofactor_rec(m, rows, nvars_of(m));
}

MultiPoly det_bareiss(PolyMatrix m) {
  require(m.is_square(), ErrorCode::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const std::size_t nvars = nvars_of(m);
  if (n == 0) return MultiPoly::constant(nvars, 1);

  bool negate = false;
  MultiPoly previous = MultiPoly::constant(nvars, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m(r, k).is_zero()) ++r;
      if (r == n) return MultiPoly(nvars);
      m.swap_rows(r, k);
      negate = !negate;
    }
    const MultiPoly& pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly numerator = m(i, j) * pivot;
        if (!m(i, k).is_zero() && !m(k, j).is_zero()) numerator -= m(i, k) * m(k, j);
        m(i, j) = exact_divide(numerator, previous);
      }
      m(i, k) = MultiPoly(nvars);
    }
    previous = m(k, k);
  }
  MultiPoly det = m(n - 1, n - 1);
  return negate ? -det : det;
}

MultiPoly det_fraction_free(const PolyMatrix& m) {
  require(m.is_square(), ErrorCode::NotSquare, "determinant of a non-square matrix");
  if (m.rows() <= 4) return det_cofactor(m);
  return det_bareiss(m);
}

}  // namespace divexp
