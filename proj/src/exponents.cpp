#include "divexp/exponents.hpp"

#include <algorithm>

#include "divexp/error.hpp"

namespace divexp {

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Dominant: return "Dominant";
    case CaseTag::LowTotal: return "LowTotal";
    case CaseTag::OddReduction: return "OddReduction";
    case CaseTag::AllTwos: return "AllTwos";
    case CaseTag::SmallN: return "SmallN";
    case CaseTag::MainRegime: return "MainRegime";
  }
  return "unknown";
}

RationalMatrix membership_system(const PointDivisor& d, int degree) {
  require(degree >= 0, ErrorCode::InvalidArgument, "negative degree");
  const auto& m = d.mult();
  const std::size_t width = static_cast<std::size_t>(degree) + 1;
  const std::size_t cols = 2 * width;

  std::vector<std::vector<Rational>> rows;
  auto unit_row = [&](std::size_t col) {
    std::vector<Rational> row(cols, 0);
    row[col] = 1;
    rows.push_back(std::move(row));
  };
  // x^m1 | px: coefficients of x^(degree - j) y^j with degree - j < m1 vanish.
  for (int j = 0; j <= degree; ++j)
    if (degree - j < m[0]) unit_row(static_cast<std::size_t>(j));
  // y^m2 | py
  for (int j = 0; j <= degree; ++j)
    if (j < m[1]) unit_row(width + static_cast<std::size_t>(j));

  // At y = 1, the k-th x-derivative of px - z py vanishes at x = z, k < mi.
  for (std::size_t i = 0; i < d.z().size(); ++i) {
    const Rational& z = d.z()[i];
    for (int k = 0; k < m[i + 2]; ++k) {
      std::vector<Rational> row(cols, 0);
      for (int j = 0; j <= degree; ++j) {
        const int power = degree - j - k;
        if (power < 0) continue;
        const Rational value = falling_factorial(degree - j, k) * pow(z, power);
        row[static_cast<std::size_t>(j)] = value;
        row[width + static_cast<std::size_t>(j)] = -z * value;
      }
      rows.push_back(std::move(row));
    }
  }

  RationalMatrix out(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = rows[r][c];
  return out;
}

Derivation derivation_from_coefficients(const RationalVector& v, int degree) {
  const std::size_t width = static_cast<std::size_t>(degree) + 1;
  require(v.size() == 2 * width, ErrorCode::InvalidArgument, "coefficient vector has wrong length");
  std::vector<Rational> px(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(width));
  std::vector<Rational> py(v.begin() + static_cast<std::ptrdiff_t>(width), v.end());
  return {BiPoly(degree, std::move(px)), BiPoly(degree, std::move(py))};
}

std::vector<Derivation> members_at_degree(const PointDivisor& d, int degree) {
  std::vector<Derivation> out;
  for (const auto& v : nullspace(membership_system(d, degree)))
    out.push_back(derivation_from_coefficients(v, degree));
  return out;
}

int dimension_at_degree(const PointDivisor& d, int degree) {
  const RationalMatrix sys = membership_system(d, degree);
  return static_cast<int>(sys.cols() - rank(sys));
}

ExponentPair compute_exponents(const PointDivisor& d) {
  const int total = d.total();
  const BiPoly qtilde = defining_polynomial(d);
  for (int e1 = 0; e1 <= total / 2; ++e1) {
    auto low = members_at_degree(d, e1);
    if (low.empty()) continue;
    const int e2 = total - e1;
    const Derivation& first = low.front();
    for (const auto& candidate : members_at_degree(d, e2)) {
      if (proportionality_constant(saito_determinant(first, candidate), qtilde))
        return {e1, e2, first, candidate};
    }
    fail(ErrorCode::CertificationFailure,
         "no degree-" + std::to_string(e2) + " member completes a Saito basis");
  }
  fail(ErrorCode::CertificationFailure, "no member found up to degree total/2");
}

Classification classify(const MultiplicityVector& m) {
  const int n = static_cast<int>(m.size());
  const int total = m.total();
  const int rest = total - m[0];
  if (m[0] >= rest) return {CaseTag::Dominant, std::pair{rest, m[0]}};
  if (total <= 2 * n - 2) return {CaseTag::LowTotal, std::pair{total - n + 1, n - 1}};
  if (total == 2 * n - 1) return {CaseTag::OddReduction, std::pair{n - 1, n}};
  if (std::all_of(m.entries().begin(), m.entries().end(), [](int x) { return x == 2; }))
    return {CaseTag::AllTwos, std::pair{n, n}};
  if (n <= 3) {
    // Any two or three points are projectively equivalent; n == 2 is always
    // Dominant, so only n == 3 reaches this branch.
    const auto d = PointDivisor::from_normalized(m, std::vector<Rational>(m.size() - 2, 1));
    const auto exps = compute_exponents(d);
    return {CaseTag::SmallN, std::pair{exps.e1, exps.e2}};
  }
  return {CaseTag::MainRegime, std::nullopt};
}

std::pair<int, int> generic_exponents(const MultiplicityVector& m) {
  const int n = static_cast<int>(m.size());
  const int total = m.total();
  require(m[0] <= total - m[0], ErrorCode::Precondition, "needs m1 <= m2 + ... + mn");
  require(total >= 2 * n - 2, ErrorCode::Precondition, "needs total >= 2n - 2");
  return {total / 2, total - total / 2};
}

}  // namespace divexp
