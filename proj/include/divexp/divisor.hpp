#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "divexp/bipoly.hpp"
#include "divexp/rational.hpp"

namespace divexp {

// Weakly decreasing positive multiplicities m1 >= m2 >= ... >= mn, n >= 2.
class MultiplicityVector {
 public:
  explicit MultiplicityVector(std::vector<int> entries);
  // "3,3,1,1"
  static MultiplicityVector parse(std::string_view csv);

  std::span<const int> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  // Sum of all multiplicities.
  int total() const { return total_; }
  std::string to_string() const;

  friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;

 private:
  std::vector<int> entries_;
  int total_ = 0;
};

// Point (a : b) of the projective line. Stored canonically as (q : 1), or
// (1 : 0) for the point at infinity.
class ProjPoint {
 public:
  ProjPoint(const Rational& a, const Rational& b);
  static ProjPoint finite(const Rational& q) { return ProjPoint(q, 1); }
  static ProjPoint infinity() { return ProjPoint(1, 0); }
  // "inf" or a rational literal.
  static ProjPoint parse(std::string_view text);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_infinity() const { return b_ == 0; }
  std::string to_string() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  Rational a_, b_;
};

// cx * x + cy * y
struct LinearForm {
  Rational cx, cy;

  // The form vanishing at p = (a : b), namely b x - a y.
  static LinearForm vanishing_at(const ProjPoint& p) { return {p.b(), -p.a()}; }
  BiPoly polynomial() const { return BiPoly::linear(cx, cy); }
};

struct WeightedForm {
  LinearForm form;
  int multiplicity;
};

// theta = px d/dx + py d/dy with px, py homogeneous of one common degree.
// Either component may be zero; both zero is the zero derivation.
class Derivation {
 public:
  Derivation() = default;
  Derivation(BiPoly px, BiPoly py);

  const BiPoly& px() const { return px_; }
  const BiPoly& py() const { return py_; }
  bool is_zero() const { return px_.is_zero() && py_.is_zero(); }
  int degree() const;

  // theta applied to a linear form: cx * px + cy * py.
  BiPoly apply(const LinearForm& alpha) const;
  Derivation operator*(const BiPoly& h) const { return {px_ * h, py_ * h}; }
  Derivation operator+(const Derivation& o) const { return {px_ + o.px_, py_ + o.py_}; }

  friend bool operator==(const Derivation&, const Derivation&) = default;

 private:
  BiPoly px_, py_;
};

Derivation euler_derivation();

// Projective change of coordinates (a : b) -> (p a + q b : r a + s b).
struct MobiusMap {
  Rational p, q, r, s;
  ProjPoint apply(const ProjPoint& pt) const;
};

// A multi-arrangement of points on the projective line in the coordinates
// where the defining polynomial reads x^m1 y^m2 prod_{i>=3} (x - z_i y)^m_i.
// The point of largest multiplicity sits at 0 (form x), the next at infinity
// (form y); z holds the remaining points, all nonzero and pairwise distinct.
class PointDivisor {
 public:
  static PointDivisor from_normalized(MultiplicityVector mult, std::vector<Rational> z);

  const MultiplicityVector& mult() const { return mult_; }
  std::span<const Rational> z() const { return z_; }
  std::size_t size() const { return mult_.size(); }
  int total() const { return mult_.total(); }

  // Linear forms x, y, x - z_i y with their multiplicities.
  std::vector<WeightedForm> forms() const;

  // Where the divisor came from when built by normalize(): the input points,
  // the input index of each sorted position, and the coordinate change used.
  std::span<const ProjPoint> input_points() const { return input_points_; }
  std::span<const std::size_t> input_order() const { return input_order_; }
  const std::optional<MobiusMap>& normalization() const { return normalization_; }

 private:
  PointDivisor(MultiplicityVector mult, std::vector<Rational> z);
  friend PointDivisor normalize(std::span<const ProjPoint>, std::span<const int>);

  MultiplicityVector mult_;
  std::vector<Rational> z_;
  std::vector<ProjPoint> input_points_;
  std::vector<std::size_t> input_order_;
  std::optional<MobiusMap> normalization_;
};

// Sorts by multiplicity (stable, so ties keep input order) and moves the two
// leading points to 0 and infinity.
PointDivisor normalize(std::span<const ProjPoint> points, std::span<const int> mult);

// x^m1 y^m2 prod (x - z_i y)^m_i
BiPoly defining_polynomial(const PointDivisor& d);
// The same product with every multiplicity 1.
BiPoly reduced_polynomial(const PointDivisor& d);

// theta(alpha_i) divisible by alpha_i^m_i for every i. Throws InvalidArgument
// on the zero derivation.
bool is_member(const Derivation& theta, std::span<const WeightedForm> forms);
bool is_member(const Derivation& theta, const PointDivisor& d);

// (Q~ / x^m1) d/dy, of degree total - m1.
Derivation theta1(const PointDivisor& d);
// (Q~ / Q) times the Euler derivation, of degree total - n + 1.
Derivation theta2(const PointDivisor& d);

// Explicit basis of degree n when every multiplicity is 2.
std::pair<Derivation, Derivation> xi_basis(const PointDivisor& d);

// px_a py_b - py_a px_b
BiPoly saito_determinant(const Derivation& a, const Derivation& b);
// c with saito_determinant(a, b) = c * target, if such a nonzero c exists.
std::optional<Rational> proportionality_constant(const BiPoly& value, const BiPoly& target);
// True iff the Saito determinant is a nonzero constant multiple of the
// defining polynomial. Throws NotMember if either derivation is not in D.
bool saito_check(const Derivation& a, const Derivation& b, const PointDivisor& d);

}  // namespace divexp
