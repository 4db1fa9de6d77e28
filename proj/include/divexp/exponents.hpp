#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "divexp/divisor.hpp"
#include "divexp/linear_algebra.hpp"

namespace divexp {

// Exponents e1 <= e2 with a basis of D certified by Saito's criterion.
struct ExponentPair {
  int e1 = 0;
  int e2 = 0;
  Derivation first;   // degree e1
  Derivation second;  // degree e2
};

enum class CaseTag {
  Dominant,      // m1 >= m2 + ... + mn
  LowTotal,      // total <= 2n - 2
  OddReduction,  // total == 2n - 1
  AllTwos,       // every mi == 2
  SmallN,        // n <= 3
  MainRegime,    // balanced exponents for points in general position
};

std::string_view to_string(CaseTag tag);

struct Classification {
  CaseTag tag;
  std::optional<std::pair<int, int>> predicted;
};

// Linear conditions on the 2 (degree + 1) coefficients of a degree-`degree`
// derivation (px coefficients first, then py) for membership in D.
RationalMatrix membership_system(const PointDivisor& d, int degree);

// Derivation with the given coefficient vector (layout as above).
Derivation derivation_from_coefficients(const RationalVector& v, int degree);

// Basis of the degree-`degree` part of D, in nullspace order.
std::vector<Derivation> members_at_degree(const PointDivisor& d, int degree);
int dimension_at_degree(const PointDivisor& d, int degree);

// Sweeps degrees 0..floor(total/2) for the least nonzero graded piece, then
// picks the first degree-e2 basis vector completing a Saito basis. Throws
// CertificationFailure if no completion exists.
ExponentPair compute_exponents(const PointDivisor& d);

// The first of Dominant, LowTotal, OddReduction, AllTwos, SmallN that applies,
// else MainRegime. Every tag except MainRegime carries its exponents.
Classification classify(const MultiplicityVector& m);

// Balanced pair (floor(total/2), ceil(total/2)). Throws Precondition unless
// m1 <= m2 + ... + mn and total >= 2n - 2.
std::pair<int, int> generic_exponents(const MultiplicityVector& m);

}  // namespace divexp
