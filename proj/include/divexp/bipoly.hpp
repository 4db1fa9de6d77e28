#pragma once

#include <optional>
#include <string>
#include <vector>

#include "divexp/rational.hpp"

namespace divexp {

// Homogeneous polynomial in x, y with rational coefficients. Coefficient j is
// the coefficient of x^(degree - j) y^j. The zero polynomial has no
// coefficients and no degree; asking for its degree throws ZeroPolynomial.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(int degree, std::vector<Rational> coefficients);

  static BiPoly constant(const Rational& c);
  static BiPoly monomial(int x_exponent, int y_exponent, const Rational& c = 1);
  // cx * x + cy * y
  static BiPoly linear(const Rational& cx, const Rational& cy);
  static BiPoly x() { return monomial(1, 0); }
  static BiPoly y() { return monomial(0, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  // Coefficient of x^(degree - j) y^j; zero outside the range.
  Rational coefficient(int j) const;
  // Largest k with y^k dividing the polynomial.
  int y_valuation() const;
  // Polynomial in x obtained at y = 1, ascending powers of x.
  std::vector<Rational> dehomogenize() const;
  Rational evaluate(const Rational& x, const Rational& y) const;

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const BiPoly& other);
  BiPoly& operator*=(const Rational& c);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }
  BiPoly operator-() const { return *this * Rational(-1); }

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  std::string to_string() const;

 private:
  void normalize_zero();

  int degree_ = 0;
  std::vector<Rational> coeffs_;
};

BiPoly pow(const BiPoly& base, int exponent);

// q with a = b q, or nullopt if b does not divide a. Throws DivisionByZero.
std::optional<BiPoly> try_divide(const BiPoly& a, const BiPoly& b);
BiPoly exact_divide(const BiPoly& a, const BiPoly& b);

}  // namespace divexp
