#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "divexp/rational.hpp"

namespace divexp {

// The line ax + by + cz = 0, scaled so that its first nonzero coefficient is 1.
class ProjLine {
 public:
  ProjLine(const Rational& a, const Rational& b, const Rational& c);
  const std::array<Rational, 3>& coefficients() const { return coeffs_; }
  bool contains(const std::array<Rational, 3>& point) const;
  std::string to_string() const;
  friend bool operator==(const ProjLine&, const ProjLine&) = default;

 private:
  std::array<Rational, 3> coeffs_;
};

class LineArrangement {
 public:
  // Throws InvalidArgument on a repeated line.
  explicit LineArrangement(std::vector<ProjLine> lines);
  const std::vector<ProjLine>& lines() const { return lines_; }
  std::size_t size() const { return lines_.size(); }

 private:
  std::vector<ProjLine> lines_;
};

struct LatticePoint {
  std::array<Rational, 3> point;  // first nonzero coordinate 1
  std::vector<std::size_t> incident_lines;
  int barmult = 0;  // number of incident lines
};

// All intersection points, sorted by point coordinates.
std::vector<LatticePoint> intersection_lattice(const LineArrangement& a);

// barmult - 1 over the intersection points on the line, sorted decreasing.
// A pencil has a single point, so this is a plain list.
std::vector<int> restriction_multiplicities(const LineArrangement& a, std::size_t line);

struct LineClasses {
  std::size_t line = 0;
  std::vector<int> restriction;
  bool class1 = false;  // at most 3 points on the line
  bool class2 = false;  // every point on the line has barmult <= 3
  bool class3 = false;  // m1 >= m2 + ... + mn
  bool class4 = false;  // average multiplicity < 2
  bool any() const { return class1 || class2 || class3 || class4; }
};

struct ClassReport {
  std::vector<LineClasses> lines;
  bool satisfied = false;
};

ClassReport check_classes(const LineArrangement& a);

enum class Prop74Branch { PencilDominant, Covering };
std::string_view to_string(Prop74Branch b);

struct Prop74Result {
  bool satisfied = false;
  std::optional<LatticePoint> witness;
  Prop74Branch branch = Prop74Branch::PencilDominant;
};

// Looks for p with 2 barmult(p) > |A| - 3. A witness on the covering branch
// (every intersection point shares a line with p) is preferred; otherwise the
// witness has the largest barmult.
Prop74Result check_prop74(const LineArrangement& a);

// Whether every intersection point lies on a line through p.
bool covers(const LineArrangement& a, const LatticePoint& p);

struct Certificate {
  std::string kind;  // "class1" .. "class4" or "prop74"
  std::optional<std::size_t> line;
  std::optional<LatticePoint> point;
  std::optional<Prop74Branch> branch;
};

struct TeraoStatus {
  bool guaranteed = false;
  std::vector<Certificate> certificates;
};

TeraoStatus terao_status(const LineArrangement& a);

}  // namespace divexp
