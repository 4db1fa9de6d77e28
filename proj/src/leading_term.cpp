#include "divexp/leading_term.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "divexp/error.hpp"
#include "divexp/wronskian.hpp"

namespace divexp {

namespace {

int permutation_sign(const std::vector<int>& seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

OverlapColumn partner(const OverlapColumn& c) {
  return {c.letter == OverlapLetter::A ? OverlapLetter::B : OverlapLetter::A, c.index};
}

struct AdmissibleSearch {
  int first;
  int last;
  std::span<const int> sizes;
  std::vector<std::vector<OverlapColumn>> blocks;
  std::vector<char> used_a, used_b;
  std::vector<AdmissiblePartition> out;

  char& used(const OverlapColumn& c) {
    auto& v = c.letter == OverlapLetter::A ? used_a : used_b;
    return v[static_cast<std::size_t>(c.index - first)];
  }

  // Position in the reference order a_first..a_last, b_first..b_last.
  int rank(const OverlapColumn& c) const {
    const int pairs = last - first + 1;
    return (c.letter == OverlapLetter::A ? 0 : pairs) + (c.index - first);
  }

  void finish() {
    std::vector<int> seq;
    for (const auto& b : blocks)
      for (const auto& c : b) seq.push_back(rank(c));
    out.push_back({blocks, permutation_sign(seq)});
  }

  void start_block(std::size_t b) {
    if (b == sizes.size()) {
      finish();
      return;
    }
    std::vector<OverlapColumn> starts;
    if (b == 0)
      starts = {{OverlapLetter::A, first}, {OverlapLetter::B, first}};
    else
      starts = {partner(blocks.back().back())};
    for (const auto& c : starts) {
      if (used(c)) continue;
      used(c) = true;
      blocks.push_back({c});
      extend_block(b);
      blocks.pop_back();
      used(c) = false;
    }
  }

  void extend_block(std::size_t b) {
    auto& block = blocks.back();
    if (static_cast<int>(block.size()) == sizes[b]) {
      start_block(b + 1);
      return;
    }
    const OverlapColumn prev = block.back();
    if (prev.index + 1 > last) return;
    std::vector<OverlapColumn> next{{OverlapLetter::B, prev.index + 1}};
    if (prev.letter == OverlapLetter::A) next.insert(next.begin(), {OverlapLetter::A, prev.index + 1});
    for (const auto& c : next) {
      if (used(c)) continue;
      used(c) = true;
      blocks.back().push_back(c);
      extend_block(b);
      blocks.back().pop_back();
      used(c) = false;
    }
  }
};

Integer pi_factor(int m) {
  Integer p = 1;
  for (int j = 1; j <= m - 2; ++j) p *= factorial(j);
  return p;
}

}  // namespace

OverlapSpec overlap(const MultiplicityVector& m) {
  const MatrixMLayout layout = matrix_m_layout(m);
  OverlapSpec spec;
  spec.s = std::max(0, layout.e - m[0] - m[1] + 2);
  spec.top_degree = layout.e - m[1] + 1;
  for (int i = 0; i < spec.s; ++i) {
    const int deg = spec.top_degree - i;
    spec.a_columns.push_back(layout.e - deg);
    spec.b_columns.push_back(layout.f_cols + layout.g_cols - deg);
  }
  return spec;
}

std::string AdmissiblePartition::to_string() const {
  std::string s;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b > 0) s += '|';
    for (const auto& c : blocks[b])
      s += (c.letter == OverlapLetter::A ? "a" : "b") + std::to_string(c.index);
  }
  return s;
}

std::vector<AdmissiblePartition> enumerate_admissible(int first, int last,
                                                      std::span<const int> block_sizes) {
  require(first >= 1 && last >= first - 1, ErrorCode::InvalidArgument, "bad overlap index range");
  const int pairs = last - first + 1;
  if (pairs == 0) {
    require(block_sizes.empty(), ErrorCode::InvalidArgument, "block sizes given for an empty overlap");
    return {AdmissiblePartition{}};
  }
  require(!block_sizes.empty() && block_sizes[0] == 1, ErrorCode::InvalidArgument,
          "the first block must hold one column");
  require(std::all_of(block_sizes.begin(), block_sizes.end(), [](int x) { return x >= 1; }),
          ErrorCode::InvalidArgument, "block sizes must be positive");
  require(std::accumulate(block_sizes.begin(), block_sizes.end(), 0) == 2 * pairs,
          ErrorCode::InvalidArgument, "block sizes must cover every overlap column");
  AdmissibleSearch search{first, last, block_sizes, {},
                          std::vector<char>(static_cast<std::size_t>(pairs), 0),
                          std::vector<char>(static_cast<std::size_t>(pairs), 0), {}};
  search.start_block(0);
  return std::move(search.out);
}

std::vector<AdmissiblePartition> enumerate_admissible(const OverlapSpec& spec,
                                                      std::span<const int> block_sizes) {
  const int sum = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  require(sum % 2 == 0 && sum / 2 <= spec.s, ErrorCode::InvalidArgument,
          "block sizes do not fit the overlap");
  return enumerate_admissible(spec.s - sum / 2 + 1, spec.s, block_sizes);
}

Integer sigma(int m_r, int u) {
  require(m_r >= 2 && u >= 2, ErrorCode::InvalidArgument, "sigma needs m_r >= 2 and u >= 2");
  std::vector<int> sizes(static_cast<std::size_t>(u), 2);
  sizes.front() = 1;
  sizes.back() = 1;
  Integer total = 0;
  for (const auto& p : enumerate_admissible(1, u - 1, sizes)) {
    Integer term = p.sign;
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
      const auto& blk = p.blocks[b];
      if (b == 0)
        term *= blk[0].letter == OverlapLetter::A ? 1 : m_r;
      else if (b + 1 == p.blocks.size())
        term *= blk[0].letter == OverlapLetter::A ? -2 : -1;
      else
        term *= blk[0].letter == blk[1].letter ? -1 : -2;
    }
    total += term;
  }
  return total;
}

Integer sigma_closed_form(int m_r, int u) {
  require(m_r >= 2 && u >= 2, ErrorCode::InvalidArgument, "sigma needs m_r >= 2 and u >= 2");
  const Integer magnitude = (m_r - 1) * u + 1;
  return ((u + 3) / 2) % 2 == 0 ? magnitude : Integer(-magnitude);
}

Integer sigma_recursion(int m_r, int u) {
  require(m_r >= 2 && u >= 4, ErrorCode::InvalidArgument, "the recursion needs m_r >= 2 and u >= 4");
  const Integer step = m_r * sigma(2, u - 1);
  return sigma(2, u - 2) + (u % 2 == 0 ? step : Integer(-step));
}

Integer two_block_sum(int m_r, int m_last) {
  require(m_r >= 2 && m_last >= 2, ErrorCode::InvalidArgument, "multiplicities must be at least 2");
  const std::vector<int> sizes{1, 1};
  const Integer pi = pi_factor(m_last);
  Integer total = 0;
  for (const auto& p : enumerate_admissible(1, 1, sizes)) {
    const bool first_a = p.blocks[0][0].letter == OverlapLetter::A;
    const bool last_a = p.blocks[1][0].letter == OverlapLetter::A;
    Integer term = p.sign * (first_a ? Integer(1) : Integer(m_r));
    term *= last_a ? pi * factorial(m_last) : pi * factorial(m_last - 1);
    total += term;
  }
  return total;
}

Integer two_block_closed_form(int m_r, int m_last) {
  require(m_r >= 2 && m_last >= 2, ErrorCode::InvalidArgument, "multiplicities must be at least 2");
  return pi_factor(m_last) * factorial(m_last - 1) * (1 - m_r * m_last);
}

namespace {

struct LaplaceSearch {
  const MatrixMLayout& layout;
  std::size_t nvars;
  std::vector<bool> taken;
  std::vector<std::vector<int>> chosen;
  std::vector<LaplaceTerm> terms;

  // Minor of block `b` on the given columns: the Wronskian of the column
  // powers, times z^(number of g-columns).
  bool minor(std::size_t b, const std::vector<int>& cols, Integer& coeff, int& degree) const {
    std::vector<int> lambda;
    int g = 0;
    for (int c : cols) {
      lambda.push_back(layout.column_power(c));
      if (layout.is_g_column(c)) ++g;
    }
    coeff = wronskian_coefficient_any_order(lambda);
    if (coeff == 0) return false;
    const int k = layout.row_blocks[b];
    degree = std::accumulate(lambda.begin(), lambda.end(), 0) - k * (k - 1) / 2 + g;
    return true;
  }

  void block(std::size_t b, Integer coeff, Exponents mono) {
    if (b == layout.row_blocks.size()) {
      std::vector<int> seq;
      for (const auto& cs : chosen) seq.insert(seq.end(), cs.begin(), cs.end());
      terms.push_back({chosen, permutation_sign(seq), coeff, mono});
      return;
    }
    chosen.emplace_back();
    pick(b, 0, coeff, mono);
    chosen.pop_back();
  }

  void pick(std::size_t b, int from, const Integer& coeff, Exponents& mono) {
    const auto& cur = chosen[b];
    if (static_cast<int>(cur.size()) == layout.row_blocks[b]) {
      Integer c;
      int deg = 0;
      if (!minor(b, cur, c, deg)) return;
      Exponents next = mono;
      next[b] = deg;
      block(b + 1, coeff * c, std::move(next));
      return;
    }
    for (int col = from; col < layout.size(); ++col) {
      if (taken[static_cast<std::size_t>(col)]) continue;
      taken[static_cast<std::size_t>(col)] = true;
      chosen[b].push_back(col);
      pick(b, col + 1, coeff, mono);
      chosen[b].pop_back();
      taken[static_cast<std::size_t>(col)] = false;
    }
  }
};

}  // namespace

LaplaceExpansion laplace_expansion(const MultiplicityVector& m) {
  const MatrixMLayout layout = matrix_m_layout(m);
  require(layout.size() <= 12, ErrorCode::Precondition, "Laplace development limited to 12 rows");
  const std::size_t nvars = m.size() - 2;
  LaplaceSearch search{layout, nvars, std::vector<bool>(static_cast<std::size_t>(layout.size()), false),
                       {}, {}};
  Exponents zero(nvars, 0);
  search.block(0, Integer(1), zero);

  LaplaceExpansion out;
  out.polynomial = MultiPoly(nvars);
  for (const auto& t : search.terms)
    out.polynomial += MultiPoly::monomial(t.monomial, t.sign * t.coefficient);
  if (out.polynomial.is_zero()) return out;
  auto [mono, coeff] = out.polynomial.leading_term();
  out.leading_monomial = mono;
  out.leading_coefficient = coeff;
  for (auto& t : search.terms)
    if (t.monomial == mono) out.leading_terms.push_back(std::move(t));
  return out;
}

LaplaceTerm identity_partition_term(const MultiplicityVector& m) {
  const MatrixMLayout layout = matrix_m_layout(m);
  const std::size_t nvars = m.size() - 2;
  LaplaceSearch search{layout, nvars, {}, {}, {}};
  LaplaceTerm term;
  term.coefficient = 1;
  term.monomial.assign(nvars, 0);
  int col = 0;
  for (std::size_t b = 0; b < nvars; ++b) {
    std::vector<int> cols(static_cast<std::size_t>(layout.row_blocks[b]));
    std::iota(cols.begin(), cols.end(), col);
    col += layout.row_blocks[b];
    Integer c;
    int deg = 0;
    if (!search.minor(b, cols, c, deg)) {
      term.coefficient = 0;
      deg = 0;
    }
    term.coefficient *= c;
    term.monomial[b] = deg;
    term.columns.push_back(std::move(cols));
  }
  return term;
}

LeadingCheck leading_coefficient_check(const MultiplicityVector& m) {
  const MatrixMLayout layout = matrix_m_layout(m);
  require(layout.size() <= 8, ErrorCode::Precondition, "leading check needs m3 + ... + mn <= 8");
  LeadingCheck check;
  const MultiPoly d = det_d(m);
  const LaplaceExpansion lap = laplace_expansion(m);
  check.contributing_partitions = lap.leading_terms.size();
  check.predicted_coefficient = lap.leading_coefficient;
  if (d.is_zero()) {
    check.agree = lap.polynomial.is_zero();
    return check;
  }
  auto [mono, coeff] = d.leading_term();
  check.monomial = mono;
  check.determinant_coefficient = coeff;
  check.agree = !lap.polynomial.is_zero() && lap.leading_monomial == mono &&
                lap.leading_coefficient == coeff;
  return check;
}

}  // namespace divexp
