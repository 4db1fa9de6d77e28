#include <doctest.h>

#include <random>

#include "divexp/bipoly.hpp"
#include "divexp/error.hpp"
#include "divexp/linear_algebra.hpp"
#include "divexp/symbolic_det.hpp"
#include "divexp/wronskian.hpp"
#include "oracles.hpp"

using namespace divexp;

namespace {

MultiPoly z(std::size_t i, std::size_t nvars = 2) { return MultiPoly::variable(nvars, i); }

MultiPoly random_poly(std::mt19937_64& rng, std::size_t nvars, int max_deg, int terms) {
  std::uniform_int_distribution<int> coeff(-4, 4), deg(0, max_deg);
  MultiPoly p(nvars);
  for (int t = 0; t < terms; ++t) {
    Exponents e(nvars);
    for (auto& x : e) x = deg(rng);
    p += MultiPoly::monomial(e, coeff(rng));
  }
  return p;
}

}  // namespace

TEST_SUITE("exact-algebra") {
  TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-4/6") == Rational(-2, 3));
    CHECK(parse_rational("+7/1") == 7);
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    CHECK(to_string(Rational(-3)) == "-3");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
  }

  TEST_CASE("factorials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(3, 0) == 1);
    CHECK(falling_factorial(2, 3) == 0);
  }

  TEST_CASE("multipoly arithmetic and printing") {
    const MultiPoly p = z(0) * z(0) * 3 * z(1) - z(1);
    CHECK(p.to_string() == "3*z3^2*z4 - z4");
    CHECK(p.total_degree() == 3);
    CHECK_FALSE(p.is_homogeneous());
    CHECK((p - p).is_zero());
    const Rational pt[] = {2, 5};
    CHECK(p.evaluate(pt) == 55);
    const auto [mono, c] = p.leading_term();
    CHECK(mono == Exponents{2, 1});
    CHECK(c == 3);
    CHECK_THROWS_AS(MultiPoly(2).leading_term(), Error);
  }

  TEST_CASE("exact division") {
    const MultiPoly a = z(0) * z(0) - z(1) * z(1);
    CHECK(exact_divide(a, z(0) - z(1)) == z(0) + z(1));
    CHECK_FALSE(try_divide(z(0) + z(1), z(0)).has_value());
    CHECK_THROWS_AS(exact_divide(z(0) + z(1), z(0)), Error);
    CHECK_THROWS_AS(exact_divide(a, MultiPoly(2)), Error);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
      const MultiPoly x = random_poly(rng, 3, 3, 4);
      const MultiPoly y = random_poly(rng, 3, 2, 3);
      if (y.is_zero()) continue;
      CHECK(exact_divide(x * y, y) == x);
    }
  }

  TEST_CASE("bipoly") {
    const BiPoly f = BiPoly::linear(1, -2);  // x - 2y
    CHECK(f.to_string() == "x - 2*y");
    CHECK((f * f).to_string() == "x^2 - 4*x*y + 4*y^2");
    CHECK(exact_divide(f * BiPoly::y(), BiPoly::y()) == f);
    CHECK_FALSE(try_divide(f, BiPoly::y()).has_value());
    CHECK((f * BiPoly::y()).y_valuation() == 1);
    CHECK(f.evaluate(4, 2) == 0);
  }

  TEST_CASE("nullspace") {
    RationalMatrix zero(2, 2, Rational(0));
    CHECK(nullspace(zero).size() == 2);
    RationalMatrix id(3, 3, Rational(0));
    for (std::size_t i = 0; i < 3; ++i) id(i, i) = 1;
    CHECK(nullspace(id).empty());
    RationalMatrix row(1, 2);
    row(0, 0) = 1;
    row(0, 1) = -1;
    const auto k = nullspace(row);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == RationalVector{1, 1});

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> entry(-3, 3), dim(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
      const auto r = static_cast<std::size_t>(dim(rng));
      const auto c = static_cast<std::size_t>(dim(rng));
      RationalMatrix m(r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = trial % 3 == 0 ? entry(rng) % 2 : entry(rng);
      const auto basis = nullspace(m);
      CHECK(basis.size() + rank(m) == c);
      for (const auto& v : basis)
        for (const auto& x : multiply(m, v)) CHECK(x == 0);
    }
  }

  TEST_CASE("rational determinant against the Leibniz sum") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> entry(-5, 5), dim(1, 5);
    for (int trial = 0; trial < 80; ++trial) {
      const auto n = static_cast<std::size_t>(dim(rng));
      RationalMatrix m(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (auto& x : m.row(r)) x = make_rational(entry(rng), 1 + (trial % 3));
      CHECK(determinant(m) == oracle::leibniz(m));
    }
  }

  TEST_CASE("symbolic determinants agree with cofactor and Leibniz") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int trial = 0; trial < 40; ++trial) {
      const auto n = static_cast<std::size_t>(dim(rng));
      PolyMatrix m(n, n, MultiPoly(2));
      for (std::size_t r = 0; r < n; ++r)
        for (auto& x : m.row(r)) x = trial % 4 == 0 ? random_poly(rng, 2, 1, 1) : random_poly(rng, 2, 2, 2);
      const MultiPoly ref = oracle::leibniz(m, 2);
      CHECK(det_bareiss(m) == ref);
      CHECK(det_fraction_free(m) == ref);
      if (n <= 4) CHECK(det_cofactor(m) == ref);
    }
    CHECK_THROWS_AS(det_fraction_free(PolyMatrix(2, 3, MultiPoly(1))), Error);
    CHECK(det_bareiss(PolyMatrix(0, 0, MultiPoly(1))) == MultiPoly::constant(0, 1));
  }

  TEST_CASE("wronskian closed form") {
    const int l[] = {2, 1, 0};
    const auto w = wronskian_closed_form(l);
    CHECK(w.degree == 0);
    CHECK(w.coefficient == -2);
    const int bad[] = {1, 1};
    CHECK_THROWS_AS(wronskian_closed_form(bad), Error);
    CHECK(wronskian_coefficient_any_order(bad) == 0);
    const int swapped[] = {0, 1};
    const int sorted[] = {1, 0};
    CHECK(wronskian_coefficient_any_order(swapped) == -wronskian_closed_form(sorted).coefficient);
  }

  TEST_CASE("wronskian closed form matches the symbolic determinant on 200 tuples") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> len(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
      const int k = len(rng);
      std::vector<int> pool(13);
      std::iota(pool.begin(), pool.end(), 0);
      std::shuffle(pool.begin(), pool.end(), rng);
      std::vector<int> lambda(pool.begin(), pool.begin() + k);
      std::sort(lambda.rbegin(), lambda.rend());
      const auto closed = wronskian_closed_form(lambda);
      const MultiPoly sym = wronskian_symbolic(lambda);
      REQUIRE(sym.is_monomial());
      const auto [mono, c] = sym.leading_term();
      CHECK(mono[0] == closed.degree);
      CHECK(c == closed.coefficient);
    }
  }
}
