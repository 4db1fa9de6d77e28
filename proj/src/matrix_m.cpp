#include "divexp/matrix_m.hpp"

#include <bit>
#include <cstdint>
#include <map>

#include "divexp/error.hpp"

namespace divexp {

int MatrixMLayout::column_power(int col) const {
  return is_g_column(col) ? g_cols - 1 - (col - f_cols) : e - col;
}

int MatrixMLayout::column_degree(int col) const {
  return column_power(col) + (is_g_column(col) ? 1 : 0);
}

MatrixMLayout matrix_m_layout(const MultiplicityVector& m) {
  require(m.size() >= 3, ErrorCode::Precondition, "matrix M needs at least three points");
  require(m.total() % 2 == 0, ErrorCode::Precondition,
          "matrix M is defined only for an even total multiplicity");
  MatrixMLayout layout;
  layout.e = m.total() / 2 - 1;
  require(layout.e - m[0] >= 0, ErrorCode::Precondition,
          "matrix M needs m1 < m2 + ... + mn");
  for (std::size_t i = 2; i < m.size(); ++i) layout.row_blocks.push_back(m[i]);
  layout.f_cols = layout.e - m[0] + 1;
  layout.g_cols = layout.e - m[1] + 1;
  return layout;
}

namespace {

// Calls emit(row, col, power_of_z, coefficient) for every nonzero entry.
template <class Emit>
void for_each_entry(const MatrixMLayout& layout, Emit&& emit) {
  int row = 0;
  for (std::size_t block = 0; block < layout.row_blocks.size(); ++block) {
    for (int k = 0; k < layout.row_blocks[block]; ++k, ++row) {
      for (int col = 0; col < layout.size(); ++col) {
        const int lambda = layout.column_power(col);
        if (lambda - k < 0) continue;
        const int power = lambda - k + (layout.is_g_column(col) ? 1 : 0);
        emit(block, row, col, power, falling_factorial(lambda, k));
      }
    }
  }
}

}  // namespace

SymbolicM build_m_symbolic(const MultiplicityVector& m) {
  const MatrixMLayout layout = matrix_m_layout(m);
  const std::size_t nvars = m.size() - 2;
  const auto n = static_cast<std::size_t>(layout.size());
  PolyMatrix mat(n, n, MultiPoly(nvars));
  for_each_entry(layout, [&](std::size_t block, int row, int col, int power, const Integer& c) {
    Exponents e(nvars, 0);
    e[block] = power;
    mat(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) = MultiPoly::monomial(e, c);
  });
  return {std::move(mat), layout};
}

RationalMatrix build_m_evaluated(const MultiplicityVector& m, std::span<const Rational> z) {
  const MatrixMLayout layout = matrix_m_layout(m);
  require(z.size() + 2 == m.size(), ErrorCode::InvalidArgument, "wrong number of z values");
  const auto n = static_cast<std::size_t>(layout.size());
  RationalMatrix mat(n, n, Rational(0));
  for_each_entry(layout, [&](std::size_t block, int row, int col, int power, const Integer& c) {
    mat(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) = c * pow(z[block], power);
  });
  return mat;
}

namespace {

// Laplace development along the row blocks, carried as a map from the set of
// used columns to the partial sum. Each row block involves a single variable,
// so its minors are cheap univariate determinants.
MultiPoly det_by_blocks(const SymbolicM& sym) {
  const auto& layout = sym.layout;
  const auto n = static_cast<std::size_t>(layout.size());
  const std::size_t nvars = layout.row_blocks.size();
  using Mask = std::uint32_t;
  std::map<Mask, MultiPoly> states{{Mask{0}, MultiPoly::constant(nvars, 1)}};
  std::size_t first_row = 0;
  for (const int height : layout.row_blocks) {
    const auto k = static_cast<std::size_t>(height);
    std::map<Mask, MultiPoly> minors;
    std::map<Mask, MultiPoly> next;
    for (const auto& [used, partial] : states) {
      const Mask free = ~used & ((Mask{1} << n) - 1);
      for (Mask pick = free; pick; pick = (pick - 1) & free) {
        if (static_cast<std::size_t>(std::popcount(pick)) != k) continue;
        auto it = minors.find(pick);
        if (it == minors.end()) {
          PolyMatrix sub(k, k, MultiPoly(nvars));
          std::size_t c = 0;
          for (std::size_t col = 0; col < n; ++col) {
            if (!(pick >> col & 1)) continue;
            for (std::size_t r = 0; r < k; ++r) sub(r, c) = sym.matrix(first_row + r, col);
            ++c;
          }
          it = minors.emplace(pick, det_bareiss(std::move(sub))).first;
        }
        if (it->second.is_zero()) continue;
        int inversions = 0;
        for (std::size_t col = 0; col < n; ++col)
          if (pick >> col & 1) inversions += std::popcount(used >> col);
        MultiPoly term = partial * it->second;
        if (inversions % 2) term = -term;
        auto [slot, fresh] = next.try_emplace(used | pick, std::move(term));
        if (!fresh) slot->second += term;
      }
    }
    states = std::move(next);
    first_row += k;
  }
  const auto full = states.find(static_cast<Mask>((std::uint64_t{1} << n) - 1));
  return full == states.end() ? MultiPoly(nvars) : full->second;
}

}  // namespace

MultiPoly det_d(const MultiplicityVector& m) {
  const SymbolicM sym = build_m_symbolic(m);
  if (sym.layout.size() <= 24) return det_by_blocks(sym);
  return det_fraction_free(sym.matrix);
}

MultiPoly forced_factor(const MultiplicityVector& m) {
  const std::size_t nvars = m.size() - 2;
  MultiPoly f = MultiPoly::constant(nvars, 1);
  for (std::size_t k = 0; k < nvars; ++k)
    f *= pow(MultiPoly::variable(nvars, k), static_cast<unsigned>(m[k + 2]));
  for (std::size_t i = 0; i < nvars; ++i)
    for (std::size_t j = 0; j < i; ++j)
      f *= pow(MultiPoly::variable(nvars, j) - MultiPoly::variable(nvars, i),
               static_cast<unsigned>(m[i + 2]));
  return f;
}

MultiPoly reduce_d1(const MultiplicityVector& m) {
  const MultiPoly d = det_d(m);
  require(!d.is_zero(), ErrorCode::ZeroPolynomial, "d vanishes identically for " + m.to_string());
  auto q = try_divide(d, forced_factor(m));
  if (!q)
    fail(ErrorCode::NotDivisible,
         "d does not factor as z-powers times difference powers for " + m.to_string());
  return *std::move(q);
}

bool is_degenerate(const PointDivisor& d) {
  return determinant(build_m_evaluated(d.mult(), d.z())) == 0;
}

std::optional<Derivation> degeneracy_witness(const PointDivisor& d) {
  const MatrixMLayout layout = matrix_m_layout(d.mult());
  const auto kernel = nullspace(build_m_evaluated(d.mult(), d.z()));
  if (kernel.empty()) return std::nullopt;
  const RationalVector& v = kernel.front();
  const int e = layout.e;
  const int m2 = d.mult()[1];
  std::vector<Rational> px(static_cast<std::size_t>(e) + 1, 0);
  std::vector<Rational> py(static_cast<std::size_t>(e) + 1, 0);
  // theta = x^m1 f d/dx - y^m2 g d/dy
  for (int j = 0; j < layout.f_cols; ++j) px[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j)];
  for (int j = 0; j < layout.g_cols; ++j)
    py[static_cast<std::size_t>(m2 + j)] = -v[static_cast<std::size_t>(layout.f_cols + j)];
  return Derivation(BiPoly(e, std::move(px)), BiPoly(e, std::move(py)));
}

ScanReport degeneration_scan(const MultiplicityVector& m, std::span<const Rational> grid) {
  require(!grid.empty(), ErrorCode::InvalidArgument, "empty scan grid");
  ScanReport report;
  report.d1 = reduce_d1(m);
  const std::size_t nvars = m.size() - 2;

  std::vector<std::size_t> idx(nvars, 0);
  std::vector<Rational> point(nvars);
  while (true) {
    for (std::size_t i = 0; i < nvars; ++i) point[i] = grid[idx[i]];
    ++report.tuples_checked;
    if (report.d1.evaluate(point) == 0) {
      bool valid = true;
      for (std::size_t i = 0; i < nvars && valid; ++i) {
        if (point[i] == 0) valid = false;
        for (std::size_t j = 0; j < i && valid; ++j)
          if (point[i] == point[j]) valid = false;
      }
      (valid ? report.degenerate : report.non_arrangement_zeros).push_back(point);
    }
    std::size_t k = nvars;
    while (k > 0 && ++idx[k - 1] == grid.size()) idx[--k] = 0;
    if (k == 0) break;
  }

  for (std::size_t i = 0; i < nvars; ++i) {
    const MultiPoly zi = MultiPoly::variable(nvars, i);
    report.probes.push_back({zi.to_string(), try_divide(report.d1, zi).has_value()});
  }
  for (std::size_t i = 0; i < nvars; ++i)
    for (std::size_t j = i + 1; j < nvars; ++j) {
      const MultiPoly diff = MultiPoly::variable(nvars, i) - MultiPoly::variable(nvars, j);
      report.probes.push_back({diff.to_string(), try_divide(report.d1, diff).has_value()});
    }
  return report;
}

}  // namespace divexp
