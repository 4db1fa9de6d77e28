#include "divexp/divisor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "divexp/error.hpp"
#include "unipoly.hpp"

namespace divexp {

// --- MultiplicityVector -----------------------------------------------------

MultiplicityVector::MultiplicityVector(std::vector<int> entries) : entries_(std::move(entries)) {
  require(entries_.size() >= 2, ErrorCode::InvalidArgument,
          "a multiplicity vector needs at least two points");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    require(entries_[i] >= 1, ErrorCode::InvalidArgument, "multiplicities must be positive");
    if (i > 0)
      require(entries_[i - 1] >= entries_[i], ErrorCode::InvalidArgument,
              "multiplicities must be weakly decreasing");
  }
  total_ = std::accumulate(entries_.begin(), entries_.end(), 0);
}

MultiplicityVector MultiplicityVector::parse(std::string_view csv) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const auto comma = csv.find(',', start);
    const std::string_view piece =
        csv.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    require(!piece.empty() && piece.size() < 9 &&
                std::all_of(piece.begin(), piece.end(), [](char c) { return c >= '0' && c <= '9'; }),
            ErrorCode::InvalidArgument, "bad multiplicity list: '" + std::string(csv) + "'");
    out.push_back(std::stoi(std::string(piece)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return MultiplicityVector(std::move(out));
}

std::string MultiplicityVector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
  os << ")";
  return os.str();
}

// --- ProjPoint --------------------------------------------------------------

ProjPoint::ProjPoint(const Rational& a, const Rational& b) {
  require(a != 0 || b != 0, ErrorCode::InvalidArgument, "(0 : 0) is not a projective point");
  if (b == 0) {
    a_ = 1;
    b_ = 0;
  } else {
    a_ = a / b;
    b_ = 1;
  }
}

ProjPoint ProjPoint::parse(std::string_view text) {
  if (text == "inf" || text == "infinity") return infinity();
  return finite(parse_rational(text));
}

std::string ProjPoint::to_string() const { return is_infinity() ? "inf" : divexp::to_string(a_); }

ProjPoint MobiusMap::apply(const ProjPoint& pt) const {
  return ProjPoint(p * pt.a() + q * pt.b(), r * pt.a() + s * pt.b());
}

// --- Derivation -------------------------------------------------------------

Derivation::Derivation(BiPoly px, BiPoly py) : px_(std::move(px)), py_(std::move(py)) {
  if (!px_.is_zero() && !py_.is_zero())
    require(px_.degree() == py_.degree(), ErrorCode::InvalidArgument,
            "derivation components must share one degree");
}

int Derivation::degree() const {
  require(!is_zero(), ErrorCode::InvalidArgument, "degree of the zero derivation");
  return px_.is_zero() ? py_.degree() : px_.degree();
}

BiPoly Derivation::apply(const LinearForm& alpha) const {
  return px_ * alpha.cx + py_ * alpha.cy;
}

Derivation euler_derivation() { return {BiPoly::x(), BiPoly::y()}; }

// --- PointDivisor -----------------------------------------------------------

PointDivisor::PointDivisor(MultiplicityVector mult, std::vector<Rational> z)
    : mult_(std::move(mult)), z_(std::move(z)) {}

PointDivisor PointDivisor::from_normalized(MultiplicityVector mult, std::vector<Rational> z) {
  require(z.size() + 2 == mult.size(), ErrorCode::InvalidArgument,
          "need one z value per point beyond the first two");
  for (std::size_t i = 0; i < z.size(); ++i) {
    require(z[i] != 0, ErrorCode::InvalidArgument, "z values must be nonzero");
    for (std::size_t j = 0; j < i; ++j)
      require(z[i] != z[j], ErrorCode::InvalidArgument, "z values must be pairwise distinct");
  }
  return PointDivisor(std::move(mult), std::move(z));
}

std::vector<WeightedForm> PointDivisor::forms() const {
  std::vector<WeightedForm> out;
  out.push_back({{1, 0}, mult_[0]});
  out.push_back({{0, 1}, mult_[1]});
  for (std::size_t i = 0; i < z_.size(); ++i) out.push_back({{1, -z_[i]}, mult_[i + 2]});
  return out;
}

PointDivisor normalize(std::span<const ProjPoint> points, std::span<const int> mult) {
  require(points.size() == mult.size(), ErrorCode::InvalidArgument,
          "points and multiplicities must pair up");
  require(points.size() >= 2, ErrorCode::InvalidArgument, "need at least two points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    require(mult[i] >= 1, ErrorCode::InvalidArgument, "multiplicities must be positive");
    for (std::size_t j = 0; j < i; ++j)
      require(!(points[i] == points[j]), ErrorCode::InvalidArgument,
              "duplicate point " + points[i].to_string());
  }

  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return mult[a] > mult[b]; });

  const ProjPoint& p1 = points[order[0]];
  const ProjPoint& p2 = points[order[1]];
  // First coordinate vanishes at p1, second at p2.
  const MobiusMap g{p1.b(), -p1.a(), -p2.b(), p2.a()};

  std::vector<int> sorted;
  std::vector<Rational> z;
  for (std::size_t k = 0; k < order.size(); ++k) {
    sorted.push_back(mult[order[k]]);
    if (k >= 2) z.push_back(g.apply(points[order[k]]).a());
  }
  PointDivisor d = PointDivisor::from_normalized(MultiplicityVector(std::move(sorted)), std::move(z));
  d.input_points_.assign(points.begin(), points.end());
  d.input_order_ = std::move(order);
  d.normalization_ = g;
  return d;
}

BiPoly defining_polynomial(const PointDivisor& d) {
  BiPoly q = BiPoly::constant(1);
  for (const auto& wf : d.forms()) q *= pow(wf.form.polynomial(), wf.multiplicity);
  return q;
}

BiPoly reduced_polynomial(const PointDivisor& d) {
  BiPoly q = BiPoly::constant(1);
  for (const auto& wf : d.forms()) q *= wf.form.polynomial();
  return q;
}

// --- membership ---------------------------------------------------------------

namespace {

// alpha^m divides f, tested at y = 1 for forms with an x term and by the
// power of y otherwise.
bool power_divides(const LinearForm& alpha, int m, const BiPoly& f) {
  if (f.is_zero()) return true;
  if (f.degree() < m) return false;
  if (alpha.cx == 0) return f.y_valuation() >= m;
  const Rational root = -alpha.cy / alpha.cx;
  return detail::root_multiplicity(f.dehomogenize(), root, m) >= m;
}

}  // namespace

bool is_member(const Derivation& theta, std::span<const WeightedForm> forms) {
  require(!theta.is_zero(), ErrorCode::InvalidArgument, "membership of the zero derivation");
  for (const auto& wf : forms)
    if (!power_divides(wf.form, wf.multiplicity, theta.apply(wf.form))) return false;
  return true;
}

bool is_member(const Derivation& theta, const PointDivisor& d) {
  const auto forms = d.forms();
  return is_member(theta, forms);
}

Derivation theta1(const PointDivisor& d) {
  BiPoly py = BiPoly::monomial(0, d.mult()[1]);
  for (std::size_t i = 0; i < d.z().size(); ++i)
    py *= pow(BiPoly::linear(1, -d.z()[i]), d.mult()[i + 2]);
  return {BiPoly(), py};
}

Derivation theta2(const PointDivisor& d) {
  BiPoly h = exact_divide(defining_polynomial(d), reduced_polynomial(d));
  return euler_derivation() * h;
}

std::pair<Derivation, Derivation> xi_basis(const PointDivisor& d) {
  for (int m : d.mult().entries())
    require(m == 2, ErrorCode::Precondition, "xi basis needs every multiplicity equal to 2");
  if (d.size() == 2)
    return {Derivation(BiPoly::monomial(2, 0), BiPoly()),
            Derivation(BiPoly(), BiPoly::monomial(0, 2))};

  const BiPoly q = reduced_polynomial(d);
  BiPoly h1, h2;
  for (const Rational& zi : d.z()) {
    const BiPoly qi = exact_divide(q, BiPoly::linear(1, -zi));
    h1 += qi;
    h2 += qi * zi;
  }
  const BiPoly q_over_x = exact_divide(q, BiPoly::x());
  const BiPoly q_over_y = exact_divide(q, BiPoly::y());
  Derivation xi1(h1 * BiPoly::x(), h1 * BiPoly::y() + q_over_x * BiPoly::y());
  Derivation xi2(h2 * BiPoly::x() - q_over_y * BiPoly::x(), h2 * BiPoly::y());
  return {xi1, xi2};
}

BiPoly saito_determinant(const Derivation& a, const Derivation& b) {
  return a.px() * b.py() - a.py() * b.px();
}

std::optional<Rational> proportionality_constant(const BiPoly& value, const BiPoly& target) {
  if (value.is_zero() || target.is_zero()) return std::nullopt;
  if (value.degree() != target.degree()) return std::nullopt;
  std::optional<Rational> ratio;
  for (int j = 0; j <= target.degree(); ++j) {
    const Rational t = target.coefficient(j);
    const Rational v = value.coefficient(j);
    if (t == 0) {
      if (v != 0) return std::nullopt;
      continue;
    }
    const Rational r = v / t;
    if (ratio && *ratio != r) return std::nullopt;
    ratio = r;
  }
  return ratio;
}

bool saito_check(const Derivation& a, const Derivation& b, const PointDivisor& d) {
  require(is_member(a, d), ErrorCode::NotMember, "first derivation is not in D");
  require(is_member(b, d), ErrorCode::NotMember, "second derivation is not in D");
  return proportionality_constant(saito_determinant(a, b), defining_polynomial(d)).has_value();
}

}  // namespace divexp
