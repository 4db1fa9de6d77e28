#include "divexp/bipoly.hpp"

#include <sstream>

#include "divexp/error.hpp"
#include "unipoly.hpp"

namespace divexp {

BiPoly::BiPoly(int degree, std::vector<Rational> coefficients)
    : degree_(degree), coeffs_(std::move(coefficients)) {
  require(degree >= 0, ErrorCode::InvalidArgument, "negative degree");
  require(coeffs_.size() == static_cast<std::size_t>(degree) + 1, ErrorCode::InvalidArgument,
          "homogeneous polynomial needs degree + 1 coefficients");
  normalize_zero();
}

BiPoly BiPoly::constant(const Rational& c) { return BiPoly(0, {c}); }

BiPoly BiPoly::monomial(int x_exponent, int y_exponent, const Rational& c) {
  require(x_exponent >= 0 && y_exponent >= 0, ErrorCode::InvalidArgument,
          "negative exponent");
  std::vector<Rational> coeffs(static_cast<std::size_t>(x_exponent + y_exponent) + 1, 0);
  coeffs[static_cast<std::size_t>(y_exponent)] = c;
  return BiPoly(x_exponent + y_exponent, std::move(coeffs));
}

BiPoly BiPoly::linear(const Rational& cx, const Rational& cy) { return BiPoly(1, {cx, cy}); }

void BiPoly::normalize_zero() {
  for (const auto& c : coeffs_)
    if (c != 0) return;
  coeffs_.clear();
  degree_ = 0;
}

int BiPoly::degree() const {
  require(!is_zero(), ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
  return degree_;
}

Rational BiPoly::coefficient(int j) const {
  if (is_zero() || j < 0 || j > degree_) return 0;
  return coeffs_[static_cast<std::size_t>(j)];
}

int BiPoly::y_valuation() const {
  require(!is_zero(), ErrorCode::ZeroPolynomial, "valuation of the zero polynomial");
  int j = 0;
  while (coeffs_[static_cast<std::size_t>(j)] == 0) ++j;
  return j;
}

std::vector<Rational> BiPoly::dehomogenize() const {
  if (is_zero()) return {};
  // coefficient j multiplies x^(degree - j)
  return std::vector<Rational>(coeffs_.rbegin(), coeffs_.rend());
}

Rational BiPoly::evaluate(const Rational& x, const Rational& y) const {
  Rational sum = 0;
  for (int j = 0; j <= degree_ && !is_zero(); ++j)
    sum += coeffs_[static_cast<std::size_t>(j)] * divexp::pow(x, degree_ - j) * divexp::pow(y, j);
  return sum;
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  require(degree_ == other.degree_, ErrorCode::InvalidArgument,
          "adding homogeneous polynomials of different degrees");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  normalize_zero();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) { return *this += -other; }

BiPoly& BiPoly::operator*=(const BiPoly& other) {
  if (is_zero()) return *this;
  if (other.is_zero()) return *this = BiPoly();
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  *this = BiPoly(degree_ + other.degree_, std::move(out));
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  normalize_zero();
  return *this;
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j <= degree_; ++j) {
    const Rational& c = coeffs_[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    const int xe = degree_ - j;
    const int ye = j;
    Rational mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool need_star = false;
    if (mag != 1 || (xe == 0 && ye == 0)) {
      os << mag.get_str();
      need_star = true;
    }
    if (xe > 0) {
      os << (need_star ? "*" : "") << "x" << (xe > 1 ? "^" + std::to_string(xe) : "");
      need_star = true;
    }
    if (ye > 0) os << (need_star ? "*" : "") << "y" << (ye > 1 ? "^" + std::to_string(ye) : "");
  }
  return os.str();
}

BiPoly pow(const BiPoly& base, int exponent) {
  require(exponent >= 0, ErrorCode::InvalidArgument, "negative exponent");
  BiPoly result = BiPoly::constant(1);
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

std::optional<BiPoly> try_divide(const BiPoly& a, const BiPoly& b) {
  require(!b.is_zero(), ErrorCode::DivisionByZero, "division by the zero polynomial");
  if (a.is_zero()) return BiPoly();
  const int qdeg = a.degree() - b.degree();
  if (qdeg < 0) return std::nullopt;
  // In t = y/x the coefficient vectors are ascending polynomials; a = b q
  // holds iff B divides A and the quotient fits in degree qdeg.
  auto q = detail::divide_exact(a.coefficients(), b.coefficients());
  if (!q) return std::nullopt;
  if (q->size() > static_cast<std::size_t>(qdeg) + 1) return std::nullopt;
  q->resize(static_cast<std::size_t>(qdeg) + 1, 0);
  return BiPoly(qdeg, std::move(*q));
}

BiPoly exact_divide(const BiPoly& a, const BiPoly& b) {
  auto q = try_divide(a, b);
  if (!q) fail(ErrorCode::NotDivisible, "(" + b.to_string() + ") does not divide (" +
                                             a.to_string() + ")");
  return *std::move(q);
}

}  // namespace divexp
