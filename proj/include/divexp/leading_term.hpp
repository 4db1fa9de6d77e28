#pragma once

#include <span>
#include <string>
#include <vector>

#include "divexp/divisor.hpp"
#include "divexp/matrix_m.hpp"
#include "divexp/multipoly.hpp"

namespace divexp {

// Columns of M whose top degrees occur in both the f-block and the g-block.
// a_i is an f-column, b_i a g-column, deg(a_i) = deg(b_i) = top_degree - (i - 1).
struct OverlapSpec {
  int s = 0;  // number of (a_i, b_i) pairs; 0 when the blocks are disjoint
  int top_degree = 0;
  std::vector<int> a_columns;  // column indices in M, a_1 first
  std::vector<int> b_columns;
};

// Throws Precondition under the same conditions as matrix_m_layout.
OverlapSpec overlap(const MultiplicityVector& m);

enum class OverlapLetter { A, B };

struct OverlapColumn {
  OverlapLetter letter;
  int index;  // 1-based, as in a_1, b_1, ...
  friend bool operator==(const OverlapColumn&, const OverlapColumn&) = default;
};

struct AdmissiblePartition {
  std::vector<std::vector<OverlapColumn>> blocks;
  // Parity of the concatenated blocks against (a_first..a_last, b_first..b_last).
  int sign = 1;
  std::string to_string() const;  // e.g. "a1|b1b2|a2"
};

// Ordered partitions of {a_first..a_last, b_first..b_last} into blocks of the
// given sizes such that: the first block is a single column a_first or
// b_first; each block after the first starts with the partner (same index,
// other letter) of the previous block's last column; inside a block a_j is
// followed by a_{j+1} or b_{j+1}, and b_j by b_{j+1}.
std::vector<AdmissiblePartition> enumerate_admissible(int first, int last,
                                                      std::span<const int> block_sizes);
// O' taken as the trailing sum(block_sizes)/2 pairs of the overlap.
std::vector<AdmissiblePartition> enumerate_admissible(const OverlapSpec& spec,
                                                      std::span<const int> block_sizes);

// Signed sum over the admissible partitions of u blocks (sizes 1, 2, ..., 2, 1)
// of the product of block coefficients: the first block contributes 1 for a
// and m_r for b; a two-column block -1 for a same-letter pair and -2 for a
// mixed pair; the last block -2 for a and -1 for b.
Integer sigma(int m_r, int u);
// (-1)^ceil((u+2)/2) ((m_r - 1) u + 1)
Integer sigma_closed_form(int m_r, int u);
// sigma(2, u - 2) + (-1)^u m_r sigma(2, u - 1), for u >= 4.
Integer sigma_recursion(int m_r, int u);

// The two-block case with a last block of multiplicity m_last, common sign
// (-1)^(floor(m_r/2) + floor(m_last/2)) and the first block's factorials
// taken out: first block 1 (a) or m_r (b); last block pi (m_last - 1)! when
// it starts with b and pi m_last! when it starts with a, pi = prod_{j<=m_last-2} j!.
Integer two_block_sum(int m_r, int m_last);
// pi (m_last - 1)! (1 - m_r m_last)
Integer two_block_closed_form(int m_r, int m_last);

// One term of the block Laplace development of det M along its row blocks.
struct LaplaceTerm {
  std::vector<std::vector<int>> columns;  // per row block, increasing
  int sign = 1;
  Integer coefficient;  // product of the minors' Wronskian coefficients
  Exponents monomial;
};

struct LaplaceExpansion {
  MultiPoly polynomial;                    // sum of all terms
  Exponents leading_monomial;              // empty when the sum vanishes
  Integer leading_coefficient;
  std::vector<LaplaceTerm> leading_terms;  // terms carrying the leading monomial
};

// Every minor is a monomial by the Wronskian closed form; this enumerates all
// column partitions with nonzero minors. Throws Precondition above 12 rows.
LaplaceExpansion laplace_expansion(const MultiplicityVector& m);

// The term whose blocks take consecutive columns of M in order.
LaplaceTerm identity_partition_term(const MultiplicityVector& m);

struct LeadingCheck {
  bool agree = false;
  Exponents monomial;                // leading monomial of det M
  Integer determinant_coefficient;   // from the symbolic determinant
  Integer predicted_coefficient;     // from the Laplace development
  std::size_t contributing_partitions = 0;
};

// Compares the lex-leading term of det M with the Laplace prediction.
// Requires m3 + ... + mn <= 8.
LeadingCheck leading_coefficient_check(const MultiplicityVector& m);

}  // namespace divexp
