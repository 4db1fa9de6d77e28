#include <doctest.h>

#include <random>

#include "divexp/divisor.hpp"
#include "divexp/error.hpp"
#include "oracles.hpp"

using namespace divexp;

namespace {

PointDivisor divisor(const char* mult, std::vector<Rational> z) {
  return PointDivisor::from_normalized(MultiplicityVector::parse(mult), std::move(z));
}

BiPoly q_squared(const PointDivisor& d) {
  const BiPoly q = reduced_polynomial(d);
  return q * q;
}

// Substitutes (x, y) -> (a x + b y, c x + d y) into a homogeneous polynomial.
BiPoly substitute(const BiPoly& p, const BiPoly& sx, const BiPoly& sy) {
  if (p.is_zero()) return p;
  BiPoly out;
  for (int j = 0; j <= p.degree(); ++j) {
    const Rational c = p.coefficient(j);
    if (c == 0) continue;
    BiPoly term = BiPoly::constant(c) * pow(sx, p.degree() - j) * pow(sy, j);
    out = out.is_zero() ? term : out + term;
  }
  return out;
}

}  // namespace

TEST_SUITE("divisor-core") {
  TEST_CASE("multiplicity vectors") {
    const auto m = MultiplicityVector::parse("3,3,1,1");
    CHECK(m.total() == 8);
    CHECK(m.to_string() == "(3,3,1,1)");
    CHECK_THROWS_AS(MultiplicityVector({1, 2}), Error);
    CHECK_THROWS_AS(MultiplicityVector({3}), Error);
    CHECK_THROWS_AS(MultiplicityVector({2, 0}), Error);
    CHECK_THROWS_AS(MultiplicityVector::parse("3,a"), Error);
  }

  TEST_CASE("projective points") {
    CHECK(ProjPoint::parse("inf").is_infinity());
    CHECK(ProjPoint::parse("-1/2") == ProjPoint(Rational(-1), Rational(2)));
    CHECK(ProjPoint(Rational(4), Rational(0)) == ProjPoint::infinity());
    CHECK_THROWS_AS(ProjPoint(Rational(0), Rational(0)), Error);
  }

  TEST_CASE("normalization sends the two heaviest points to 0 and infinity") {
    const std::vector<ProjPoint> pts{ProjPoint::parse("inf"), ProjPoint::parse("0"), ProjPoint::parse("1"),
                                     ProjPoint::parse("2")};
    const int mult[] = {5, 1, 1, 1};
    const PointDivisor d = normalize(pts, mult);
    CHECK(d.mult() == MultiplicityVector({5, 1, 1, 1}));
    REQUIRE(d.z().size() == 2);
    CHECK(d.z()[0] == 1);
    CHECK(d.z()[1] == Rational(1, 2));

    const int shuffled[] = {1, 1, 5, 1};
    const PointDivisor e = normalize(pts, shuffled);
    CHECK(e.input_order()[0] == 2);
    CHECK(e.mult() == MultiplicityVector({5, 1, 1, 1}));

    const std::vector<ProjPoint> dup{ProjPoint::parse("1"), ProjPoint::parse("1"), ProjPoint::parse("2")};
    const int m3[] = {1, 1, 1};
    CHECK_THROWS_AS(normalize(dup, m3), Error);
    CHECK_THROWS_AS(divisor("3,3,1,1", {1, 1}), Error);
    CHECK_THROWS_AS(divisor("3,3,1,1", {0, 1}), Error);
    CHECK_THROWS_AS(divisor("3,3,1,1", {1}), Error);
  }

  TEST_CASE("defining polynomial") {
    const PointDivisor d = divisor("2,1,1", {3});
    CHECK(defining_polynomial(d).to_string() == "x^3*y - 3*x^2*y^2");
    CHECK(reduced_polynomial(d).to_string() == "x^2*y - 3*x*y^2");
  }

  TEST_CASE("membership matches the Taylor-shift oracle") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> coeff(-2, 2);
    const PointDivisor d = divisor("2,2,1,1", {1, -1});
    const Derivation e = euler_derivation();
    CHECK_FALSE(is_member(e, d));
    CHECK(is_member(e * defining_polynomial(d), d));
    CHECK_THROWS_AS(is_member(Derivation(), d), Error);
    for (int trial = 0; trial < 300; ++trial) {
      const int deg = 1 + trial % 5;
      std::vector<Rational> px(static_cast<std::size_t>(deg) + 1), py(px.size());
      for (auto& c : px) c = coeff(rng) * (trial % 2);
      for (auto& c : py) c = coeff(rng);
      // Bias towards members by multiplying with forms of the divisor.
      Derivation theta(BiPoly(deg, px), BiPoly(deg, py));
      if (theta.is_zero()) continue;
      if (trial % 3 == 0) theta = theta * BiPoly::linear(1, -1);
      if (trial % 5 == 0) theta = theta * BiPoly::x() * BiPoly::y();
      CHECK(is_member(theta, d) == oracle::is_member(theta, d));
    }
  }

  TEST_CASE("theta1 and theta2 are members") {
    std::mt19937_64 rng(3);
    for (const char* m : {"5,1,1,1", "3,3,1,1", "2,2,2,2", "4,2,1", "3,2,2,1,1"}) {
      const auto mult = MultiplicityVector::parse(m);
      const PointDivisor d = PointDivisor::from_normalized(mult, oracle::random_z(rng, mult.size() - 2));
      CHECK(oracle::is_member(theta1(d), d));
      CHECK(oracle::is_member(theta2(d), d));
      CHECK(is_member(theta1(d), d));
      CHECK(is_member(theta2(d), d));
    }
  }

  TEST_CASE("saito check") {
    const PointDivisor two = divisor("2,2", {});
    const auto [a, b] = xi_basis(two);
    CHECK(saito_check(a, b, two));
    const PointDivisor d = divisor("5,1,1,1", {1, 2});
    CHECK(saito_check(theta1(d), theta2(d), d));
    const Derivation e = euler_derivation() * defining_polynomial(d);
    CHECK_FALSE(saito_check(e, e * BiPoly::x(), d));
    CHECK_THROWS_AS(saito_check(euler_derivation(), theta1(d), d), Error);
  }

  TEST_CASE("xi basis: members with determinant (n - 1) Q^2") {
    // The constant is Q (h1 x - h2 y) / Q^2 + 1 = (n - 2) + 1.
    std::mt19937_64 rng(99);
    for (std::size_t n = 2; n <= 6; ++n) {
      for (int trial = 0; trial < 5; ++trial) {
        const PointDivisor d = PointDivisor::from_normalized(MultiplicityVector(std::vector<int>(n, 2)),
                                                             oracle::random_z(rng, n - 2));
        const auto [a, b] = xi_basis(d);
        CHECK(oracle::is_member(a, d));
        CHECK(oracle::is_member(b, d));
        CHECK(a.degree() == static_cast<int>(n));
        CHECK(b.degree() == static_cast<int>(n));
        const auto c = proportionality_constant(saito_determinant(a, b), q_squared(d));
        REQUIRE(c.has_value());
        CHECK(*c == Rational(static_cast<long>(n) - 1));
        CHECK(saito_check(a, b, d));
      }
    }
    CHECK_THROWS_AS(xi_basis(divisor("3,2,1", {1})), Error);
  }

  TEST_CASE("membership is invariant under a change of coordinates") {
    // Point (a : b) has form b x - a y. Substituting x -> p x + q y,
    // y -> r x + s y pulls forms back; derivations push forward by the
    // inverse matrix.
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> entry(-3, 3), coeff(-2, 2);
    int checked = 0;
    while (checked < 30) {
      const Rational p = entry(rng), q = entry(rng), r = entry(rng), s = entry(rng);
      const Rational det = p * s - q * r;
      if (det == 0) continue;
      const auto z = oracle::random_z(rng, 2, 20, 3);
      const std::vector<ProjPoint> pts{ProjPoint::finite(0), ProjPoint::infinity(), ProjPoint::finite(z[0]),
                                       ProjPoint::finite(z[1])};
      const int mult[] = {3, 2, 2, 1};
      std::vector<ProjPoint> moved;
      for (const auto& pt : pts) moved.push_back(MobiusMap{s / det, -q / det, -r / det, p / det}.apply(pt));
      const PointDivisor d0 = normalize(pts, mult);

      const int deg = 3 + checked % 3;
      std::vector<Rational> px(static_cast<std::size_t>(deg) + 1), py(px.size());
      for (auto& c : px) c = coeff(rng);
      for (auto& c : py) c = coeff(rng);
      Derivation theta(BiPoly(deg, px), BiPoly(deg, py));
      if (checked % 2 == 0) theta = theta2(d0);
      if (theta.is_zero()) continue;

      // Membership against explicit forms in the original coordinates and
      // in the moved ones.
      std::vector<WeightedForm> f0, f1;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        f0.push_back({LinearForm::vanishing_at(pts[i]), mult[i]});
        f1.push_back({LinearForm::vanishing_at(moved[i]), mult[i]});
      }
      // theta' = L^-1 (theta o L) with L = [[p, q], [r, s]] satisfies
      // theta'(f o L) = theta(f) o L, and the moved points are L^-1 pts.
      const BiPoly sx = BiPoly::linear(p, q), sy = BiPoly::linear(r, s);
      const BiPoly tx = substitute(theta.px(), sx, sy), ty = substitute(theta.py(), sx, sy);
      const Derivation pushed(tx * (s / det) - ty * (q / det), ty * (p / det) - tx * (r / det));
      CHECK(is_member(theta, f0) == is_member(pushed, f1));
      CHECK(is_member(theta, f0) == oracle::is_member(theta, d0));
      ++checked;
    }
  }
}
