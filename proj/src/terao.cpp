#include "divexp/terao.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "divexp/error.hpp"

namespace divexp {

namespace {

using Point = std::array<Rational, 3>;

void normalize(Point& p) {
  for (const auto& c : p)
    if (c != 0) {
      const Rational lead = c;
      for (auto& x : p) x /= lead;
      return;
    }
}

void require_checkable(const LineArrangement& a) {
  require(a.size() >= 3, ErrorCode::Precondition, "needs at least three lines");
}

}  // namespace

ProjLine::ProjLine(const Rational& a, const Rational& b, const Rational& c) : coeffs_{a, b, c} {
  require(a != 0 || b != 0 || c != 0, ErrorCode::InvalidArgument, "line coefficients all zero");
  normalize(coeffs_);
}

bool ProjLine::contains(const Point& p) const {
  return coeffs_[0] * p[0] + coeffs_[1] * p[1] + coeffs_[2] * p[2] == 0;
}

std::string ProjLine::to_string() const {
  return "[" + divexp::to_string(coeffs_[0]) + "," + divexp::to_string(coeffs_[1]) + "," +
         divexp::to_string(coeffs_[2]) + "]";
}

LineArrangement::LineArrangement(std::vector<ProjLine> lines) : lines_(std::move(lines)) {
  for (std::size_t i = 0; i < lines_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      require(!(lines_[i] == lines_[j]), ErrorCode::InvalidArgument,
              "repeated line " + lines_[i].to_string());
}

std::vector<LatticePoint> intersection_lattice(const LineArrangement& a) {
  const auto& ls = a.lines();
  std::map<Point, std::vector<std::size_t>> points;
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      const auto& u = ls[i].coefficients();
      const auto& v = ls[j].coefficients();
      Point p{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
      normalize(p);
      points.try_emplace(p);
    }
  std::vector<LatticePoint> out;
  for (auto& [p, incident] : points) {
    for (std::size_t k = 0; k < ls.size(); ++k)
      if (ls[k].contains(p)) incident.push_back(k);
    out.push_back({p, incident, static_cast<int>(incident.size())});
  }
  return out;
}

namespace {

std::vector<int> restriction_from(const std::vector<LatticePoint>& lattice, std::size_t line) {
  std::vector<int> m;
  for (const auto& p : lattice)
    if (std::binary_search(p.incident_lines.begin(), p.incident_lines.end(), line))
      m.push_back(p.barmult - 1);
  std::sort(m.begin(), m.end(), std::greater<>());
  return m;
}

}  // namespace

std::vector<int> restriction_multiplicities(const LineArrangement& a, std::size_t line) {
  require(line < a.size(), ErrorCode::InvalidArgument, "line index out of range");
  return restriction_from(intersection_lattice(a), line);
}

ClassReport check_classes(const LineArrangement& a) {
  require_checkable(a);
  const auto lattice = intersection_lattice(a);
  ClassReport report;
  for (std::size_t i = 0; i < a.size(); ++i) {
    LineClasses lc;
    lc.line = i;
    lc.restriction = restriction_from(lattice, i);
    const auto& m = lc.restriction;
    const int points = static_cast<int>(m.size());
    const int total = std::accumulate(m.begin(), m.end(), 0);
    lc.class1 = points <= 3;
    lc.class2 = std::all_of(m.begin(), m.end(), [](int x) { return x + 1 <= 3; });
    lc.class3 = m.front() >= total - m.front();
    lc.class4 = total < 2 * points;
    report.satisfied = report.satisfied || lc.any();
    report.lines.push_back(std::move(lc));
  }
  return report;
}

std::string_view to_string(Prop74Branch b) {
  return b == Prop74Branch::Covering ? "covering" : "pencil-dominant";
}

bool covers(const LineArrangement& a, const LatticePoint& p) {
  for (const auto& q : intersection_lattice(a)) {
    const bool shares = std::any_of(q.incident_lines.begin(), q.incident_lines.end(), [&](std::size_t l) {
      return std::binary_search(p.incident_lines.begin(), p.incident_lines.end(), l);
    });
    if (!shares) return false;
  }
  return true;
}

Prop74Result check_prop74(const LineArrangement& a) {
  require_checkable(a);
  const int lines = static_cast<int>(a.size());
  Prop74Result result;
  const LatticePoint* best = nullptr;
  for (const auto& p : intersection_lattice(a)) {
    if (2 * p.barmult <= lines - 3) continue;
    if (covers(a, p)) {
      result.satisfied = true;
      result.witness = p;
      result.branch = Prop74Branch::Covering;
      return result;
    }
    if (!best || p.barmult > best->barmult) {
      result.witness = p;
      best = &*result.witness;
    }
  }
  result.satisfied = result.witness.has_value();
  return result;
}

TeraoStatus terao_status(const LineArrangement& a) {
  TeraoStatus status;
  const ClassReport classes = check_classes(a);
  for (const auto& lc : classes.lines) {
    const std::pair<bool, const char*> flags[] = {
        {lc.class1, "class1"}, {lc.class2, "class2"}, {lc.class3, "class3"}, {lc.class4, "class4"}};
    for (const auto& [ok, kind] : flags)
      if (ok) status.certificates.push_back({kind, lc.line, std::nullopt, std::nullopt});
  }
  const Prop74Result prop = check_prop74(a);
  if (prop.satisfied) status.certificates.push_back({"prop74", std::nullopt, prop.witness, prop.branch});
  status.guaranteed = !status.certificates.empty();
  return status;
}

}  // namespace divexp
