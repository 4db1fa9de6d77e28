#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "divexp/rational.hpp"

namespace divexp {

using Exponents = std::vector<int>;

// Lexicographic order with the first variable largest (z3 > z4 > ... > zn).
// Term maps sorted with this comparator iterate leading term first.
struct LexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const { return b < a; }
};

// Sparse polynomial over the integers in a fixed number of variables.
//
// The zero polynomial has no terms. Arithmetic between polynomials requires
// equal variable counts, except that a zero operand adopts the other side's.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Integer, LexDescending>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Integer& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly monomial(Exponents exponents, const Integer& c);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Leading term in LexDescending order; throws ZeroPolynomial on zero.
  std::pair<Exponents, Integer> leading_term() const;
  int total_degree() const;
  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }

  Rational evaluate(std::span<const Rational> point) const;
  // Variable i of *this becomes variable perm[i] of the result.
  MultiPoly permute_variables(std::span<const std::size_t> perm) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Integer& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend MultiPoly operator*(MultiPoly a, const Integer& c) { return a *= c; }
  friend MultiPoly operator*(const Integer& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  // Variables rendered as prefix + (first_index + i), e.g. z3, z4, ...
  std::string to_string(const std::string& prefix = "z", int first_index = 3) const;

 private:
  void add_term(const Exponents& e, const Integer& c);
  std::size_t combined_nvars(const MultiPoly& other) const;

  std::size_t nvars_ = 0;
  TermMap terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned exponent);

// Quotient q with a = b q over the integers, or nullopt when b does not divide
// a. Throws DivisionByZero when b is zero.
std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& b);

// As try_divide, but throws NotDivisible instead of returning nullopt.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);

}  // namespace divexp
