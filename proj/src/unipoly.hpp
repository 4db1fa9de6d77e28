#pragma once

// Dense univariate helpers over the rationals, ascending coefficient order.
// Internal to the library.

#include <optional>
#include <vector>

#include "divexp/rational.hpp"

namespace divexp::detail {

using UniPoly = std::vector<Rational>;

inline void trim(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient when b divides a exactly, otherwise nullopt. b must be nonzero.
inline std::optional<UniPoly> divide_exact(UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  if (a.empty()) return UniPoly{};
  if (a.size() < b.size()) return std::nullopt;
  UniPoly q(a.size() - b.size() + 1, 0);
  const Rational& lead = b.back();
  for (std::size_t i = q.size(); i-- > 0;) {
    const Rational c = a[i + b.size() - 1] / lead;
    q[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  for (const auto& r : a)
    if (r != 0) return std::nullopt;
  return q;
}

// Multiplicity of t as a root, capped at `limit` (synthetic division by x - t).
inline int root_multiplicity(UniPoly p, const Rational& t, int limit) {
  trim(p);
  if (p.empty()) return limit;
  int count = 0;
  while (count < limit && !p.empty()) {
    // Horner division by (x - t).
    UniPoly q(p.size() - 1, 0);
    Rational carry = 0;
    for (std::size_t i = p.size(); i-- > 0;) {
      carry = carry * t + p[i];
      if (i > 0) q[i - 1] = carry;
    }
    if (carry != 0) break;
    p = std::move(q);
    trim(p);
    ++count;
    if (p.empty()) return limit;
  }
  return count;
}

}  // namespace divexp::detail
