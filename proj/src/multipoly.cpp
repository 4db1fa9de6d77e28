#include "divexp/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "divexp/error.hpp"

namespace divexp {

MultiPoly MultiPoly::constant(std::size_t nvars, const Integer& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  require(index < nvars, ErrorCode::InvalidArgument, "variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  MultiPoly p(nvars);
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::monomial(Exponents exponents, const Integer& c) {
  for (int x : exponents)
    require(x >= 0, ErrorCode::InvalidArgument, "negative exponent in monomial");
  MultiPoly p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

std::pair<Exponents, Integer> MultiPoly::leading_term() const {
  require(!is_zero(), ErrorCode::ZeroPolynomial, "leading term of the zero polynomial");
  const auto& [e, c] = *terms_.begin();
  return {e, c};
}

int MultiPoly::total_degree() const {
  require(!is_zero(), ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
  int best = 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

bool MultiPoly::is_homogeneous() const {
  if (is_zero()) return true;
  std::optional<int> degree;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    if (degree && *degree != d) return false;
    degree = d;
  }
  return true;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  require(point.size() == nvars_, ErrorCode::InvalidArgument,
          "evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term *= divexp::pow(point[i], e[i]);
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::permute_variables(std::span<const std::size_t> perm) const {
  require(perm.size() == nvars_, ErrorCode::InvalidArgument, "permutation has wrong size");
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents f(nvars_, 0);
    for (std::size_t i = 0; i < nvars_; ++i) f[perm[i]] = e[i];
    out.add_term(f, c);
  }
  return out;
}

void MultiPoly::add_term(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::size_t MultiPoly::combined_nvars(const MultiPoly& other) const {
  if (is_zero()) return std::max(nvars_, other.nvars_);
  if (other.is_zero()) return nvars_;
  require(nvars_ == other.nvars_, ErrorCode::InvalidArgument,
          "polynomials over different variable sets");
  return nvars_;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  nvars_ = combined_nvars(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  nvars_ = combined_nvars(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  const std::size_t n = combined_nvars(other);
  MultiPoly out(n);
  Exponents e(n);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

std::string MultiPoly::to_string(const std::string& prefix, int first_index) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool is_constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (mag != 1 || is_constant) {
      os << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << prefix << (first_index + static_cast<int>(i));
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

MultiPoly pow(const MultiPoly& base, unsigned exponent) {
  MultiPoly result = MultiPoly::constant(base.nvars(), 1);
  MultiPoly b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& b) {
  require(!b.is_zero(), ErrorCode::DivisionByZero, "division by the zero polynomial");
  const std::size_t n = b.nvars();
  if (a.is_zero()) return MultiPoly(n);
  require(a.nvars() == n, ErrorCode::InvalidArgument,
          "polynomials over different variable sets");

  const auto [lead_e, lead_c] = b.leading_term();
  MultiPoly remainder = a;
  MultiPoly quotient(n);
  Exponents shift(n);
  // If a = b q exactly, every remainder is a multiple of b, so its leading
  // term must be divisible by LT(b); otherwise b does not divide a.
  while (!remainder.is_zero()) {
    const auto [e, c] = remainder.leading_term();
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] < lead_e[i]) return std::nullopt;
      shift[i] = e[i] - lead_e[i];
    }
    if (!mpz_divisible_p(c.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
    Integer q = c / lead_c;
    MultiPoly term = MultiPoly::monomial(shift, q);
    remainder -= term * b;
    quotient += term;
  }
  return quotient;
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  auto q = try_divide(a, b);
  if (!q) fail(ErrorCode::NotDivisible, "(" + b.to_string() + ") does not divide (" +
                                             a.to_string() + ")");
  return *std::move(q);
}

}  // namespace divexp
