#include "divexp/wronskian.hpp"

#include <algorithm>
#include <vector>

#include "divexp/error.hpp"
#include "divexp/symbolic_det.hpp"

namespace divexp {

namespace {

void validate(std::span<const int> lambda) {
  require(!lambda.empty(), ErrorCode::InvalidArgument, "empty exponent tuple");
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    require(lambda[i] >= 0, ErrorCode::InvalidArgument, "negative exponent");
    if (i > 0)
      require(lambda[i - 1] > lambda[i], ErrorCode::InvalidArgument,
              "exponents must be strictly decreasing");
  }
}

}  // namespace

WronskianMonomial wronskian_closed_form(std::span<const int> lambda) {
  validate(lambda);
  const int k = static_cast<int>(lambda.size());
  int degree = 0;
  for (int l : lambda) degree += l;
  degree -= k * (k - 1) / 2;

  Integer coeff = ((k / 2) % 2 == 0) ? 1 : -1;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) coeff *= (lambda[i] - lambda[j]);
  return {degree, coeff};
}

MultiPoly wronskian_symbolic(std::span<const int> lambda) {
  validate(lambda);
  const std::size_t k = lambda.size();
  PolyMatrix w(k, k, MultiPoly(1));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      const int power = lambda[c] - static_cast<int>(r);
      if (power < 0) continue;
      w(r, c) = MultiPoly::monomial({power}, falling_factorial(lambda[c], static_cast<int>(r)));
    }
  }
  return det_fraction_free(w);
}

Integer wronskian_coefficient_any_order(std::span<const int> lambda) {
  std::vector<int> sorted(lambda.begin(), lambda.end());
  // Count inversions against descending order for the permutation sign.
  int inversions = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (sorted[i] == sorted[j]) return 0;
      if (sorted[i] < sorted[j]) ++inversions;
    }
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  Integer c = wronskian_closed_form(sorted).coefficient;
  return inversions % 2 == 0 ? c : Integer(-c);
}

}  // namespace divexp
