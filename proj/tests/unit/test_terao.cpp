#include <doctest.h>

#include <random>

#include "divexp/error.hpp"
#include "divexp/terao.hpp"

using namespace divexp;

namespace {

LineArrangement generic(std::size_t n) {
  // Lines x + k y + k^2 z: three of them meet only if a Vandermonde vanishes.
  std::vector<ProjLine> ls;
  for (std::size_t k = 1; k <= n; ++k) {
    const auto kk = static_cast<long>(k);
    ls.emplace_back(1, kk, kk * kk);
  }
  return LineArrangement(ls);
}

// k lines through (0 : 0 : 1) plus the line at z = 0... shifted off the pencil point.
LineArrangement near_pencil(std::size_t k) {
  std::vector<ProjLine> ls;
  for (std::size_t i = 0; i < k; ++i) ls.emplace_back(1, static_cast<long>(i), 0);
  ls.emplace_back(0, 0, 1);
  return LineArrangement(ls);
}

LineArrangement random_arrangement(std::mt19937_64& rng, std::size_t n, int box) {
  std::uniform_int_distribution<int> c(-box, box);
  std::vector<ProjLine> ls;
  while (ls.size() < n) {
    const int a = c(rng), b = c(rng), d = c(rng);
    if (a == 0 && b == 0 && d == 0) continue;
    const ProjLine l(a, b, d);
    if (std::find(ls.begin(), ls.end(), l) != ls.end()) continue;
    ls.push_back(l);
  }
  return LineArrangement(ls);
}

bool has(const TeraoStatus& s, const std::string& kind) {
  return std::any_of(s.certificates.begin(), s.certificates.end(), [&](const Certificate& c) { return c.kind == kind; });
}

// The covering branch re-derived from scratch: every pairwise intersection
// of two lines lies on some line through p.
bool covering_oracle(const LineArrangement& a, const LatticePoint& p) {
  const auto& ls = a.lines();
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      const auto& u = ls[i].coefficients();
      const auto& v = ls[j].coefficients();
      const std::array<Rational, 3> q{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
      bool on_pencil = false;
      for (auto l : p.incident_lines) on_pencil = on_pencil || ls[l].contains(q);
      if (!on_pencil) return false;
    }
  return true;
}

}  // namespace

TEST_SUITE("terao-checker") {
  TEST_CASE("lines and arrangements") {
    CHECK(ProjLine(2, 4, 6) == ProjLine(1, 2, 3));
    CHECK(ProjLine(0, -3, 3).to_string() == "[0,1,-1]");
    CHECK_THROWS_AS(ProjLine(0, 0, 0), Error);
    CHECK_THROWS_AS(LineArrangement({ProjLine(1, 0, 0), ProjLine(2, 0, 0)}), Error);
    CHECK_THROWS_AS(check_classes(LineArrangement({ProjLine(1, 0, 0), ProjLine(0, 1, 0)})), Error);
    CHECK_THROWS_AS(restriction_multiplicities(generic(3), 3), Error);
  }

  TEST_CASE("intersection lattice") {
    const auto g = intersection_lattice(generic(3));
    CHECK(g.size() == 3);
    for (const auto& p : g) CHECK(p.barmult == 2);
    const LineArrangement pencil({ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(1, 1, 0)});
    const auto pl = intersection_lattice(pencil);
    REQUIRE(pl.size() == 1);
    CHECK(pl[0].barmult == 3);
    const auto np = intersection_lattice(near_pencil(4));
    CHECK(np.size() == 5);
    CHECK(std::count_if(np.begin(), np.end(), [](const LatticePoint& p) { return p.barmult == 4; }) == 1);
    CHECK(std::count_if(np.begin(), np.end(), [](const LatticePoint& p) { return p.barmult == 2; }) == 4);
  }

  TEST_CASE("restriction multiplicities") {
    CHECK(restriction_multiplicities(generic(5), 0) == std::vector<int>{1, 1, 1, 1});
    const auto np = near_pencil(4);
    CHECK(restriction_multiplicities(np, 4) == std::vector<int>{1, 1, 1, 1});
    CHECK(restriction_multiplicities(np, 0) == std::vector<int>{3, 1});
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = random_arrangement(rng, 3 + trial % 8, 2);
      for (std::size_t i = 0; i < a.size(); ++i) {
        const auto m = restriction_multiplicities(a, i);
        CHECK(std::accumulate(m.begin(), m.end(), 0) == static_cast<int>(a.size()) - 1);
      }
    }
  }

  TEST_CASE("classes") {
    const auto g5 = check_classes(generic(5));
    CHECK(g5.satisfied);
    for (const auto& l : g5.lines) CHECK(l.class4);
    const auto np = check_classes(near_pencil(4));
    CHECK(np.lines[0].class1);
    CHECK(np.lines[0].class3);
    const auto g9 = check_classes(generic(9));
    for (const auto& l : g9.lines) {
      CHECK(l.class4);
      CHECK_FALSE(l.class1);
    }
  }

  TEST_CASE("proposition on a heavy point") {
    const auto np = check_prop74(near_pencil(4));
    CHECK(np.satisfied);
    CHECK(np.branch == Prop74Branch::Covering);
    REQUIRE(np.witness.has_value());
    CHECK(np.witness->barmult == 4);
    CHECK_FALSE(check_prop74(generic(9)).satisfied);

    // Nine lines, four through the origin, five generic: 4 > 3.
    std::vector<ProjLine> ls;
    for (long k = 0; k < 4; ++k) ls.emplace_back(1, k, 0);
    for (long k = 1; k <= 5; ++k) ls.emplace_back(k, k * k + 3, k * k * k + 7);
    const LineArrangement nine(ls);
    const auto r = check_prop74(nine);
    CHECK(r.satisfied);
    CHECK(r.witness->barmult >= 4);
    CHECK(r.branch == Prop74Branch::PencilDominant);
  }

  TEST_CASE("covering branch re-verified independently") {
    for (std::size_t k = 3; k <= 9; ++k) {
      const auto a = near_pencil(k);
      const auto r = check_prop74(a);
      REQUIRE(r.satisfied);
      CHECK(r.branch == Prop74Branch::Covering);
      CHECK(covering_oracle(a, *r.witness));
    }
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = random_arrangement(rng, 4 + trial % 6, 1);
      for (const auto& p : intersection_lattice(a)) CHECK(covers(a, p) == covering_oracle(a, p));
    }
  }

  TEST_CASE("status") {
    CHECK(terao_status(generic(12)).guaranteed);
    CHECK(has(terao_status(generic(12)), "class4"));
    const auto np = terao_status(near_pencil(5));
    CHECK(has(np, "prop74"));
    CHECK(has(np, "class1"));
  }
}
