#include "divexp/schur.hpp"

#include "divexp/error.hpp"
#include "divexp/matrix_m.hpp"
#include "divexp/symbolic_det.hpp"

namespace divexp {

void validate(const RectPartition& p) {
  require(p.base >= 1 && p.height >= 1, ErrorCode::InvalidArgument,
          "rectangle needs positive base and height");
  require(p.height <= p.nvars, ErrorCode::InvalidArgument,
          "rectangle height exceeds the number of variables");
}

namespace {

PolyMatrix alternant(std::size_t nvars, const std::vector<int>& powers) {
  PolyMatrix a(nvars, nvars, MultiPoly(nvars));
  for (std::size_t i = 0; i < nvars; ++i)
    for (std::size_t j = 0; j < nvars; ++j) {
      Exponents e(nvars, 0);
      e[i] = powers[j];
      a(i, j) = MultiPoly::monomial(e, 1);
    }
  return a;
}

}  // namespace

MultiPoly schur_rectangular(const RectPartition& p) {
  validate(p);
  const auto nvars = static_cast<std::size_t>(p.nvars);
  std::vector<int> top(nvars), delta(nvars);
  for (std::size_t j = 0; j < nvars; ++j) {
    const int lambda = static_cast<int>(j) < p.height ? p.base : 0;
    delta[j] = p.nvars - 1 - static_cast<int>(j);
    top[j] = lambda + delta[j];
  }
  return exact_divide(det_fraction_free(alternant(nvars, top)),
                      det_fraction_free(alternant(nvars, delta)));
}

SchurCheck schur_identity_check(const MultiplicityVector& m) {
  const int n = static_cast<int>(m.size());
  require(n >= 3, ErrorCode::Precondition, "needs at least three points");
  for (int i = 2; i < n; ++i)
    require(m[static_cast<std::size_t>(i)] == 1, ErrorCode::Precondition,
            "needs shape (m1, m2, 1, ..., 1)");
  require(m.total() % 2 == 0, ErrorCode::Precondition, "needs even total multiplicity");
  require(m[0] - m[1] < n - 2 && n - 2 < m[0] + m[1], ErrorCode::Precondition,
          "needs m1 - m2 < n - 2 < m1 + m2");

  SchurCheck out;
  out.base = (m[0] + m[1] - n) / 2;
  out.height = (m[1] - m[0] + n - 2) / 2;
  out.d1 = reduce_d1(m);
  const std::size_t nvars = m.size() - 2;
  out.schur = out.base == 0 ? MultiPoly::constant(nvars, 1)
                            : schur_rectangular({out.base, out.height, n - 2});
  if (out.d1 == out.schur) {
    out.match = true;
    out.sign = 1;
  } else if (out.d1 == -out.schur) {
    out.match = true;
    out.sign = -1;
  }
  return out;
}

}  // namespace divexp
