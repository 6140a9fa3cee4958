#include "dzv/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace dzv {

HomogeneousPoly::HomogeneousPoly(int degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("HomogeneousPoly: negative degree");
  coeffs_.assign(degree + 1, Rational(0));
}

HomogeneousPoly::HomogeneousPoly(int degree, std::vector<Rational> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != degree + 1)
    throw std::invalid_argument("HomogeneousPoly: coefficient count != degree + 1");
}

HomogeneousPoly HomogeneousPoly::monomial(int degree, int xpow, const Rational& c) {
  HomogeneousPoly p(degree);
  p.set_coeff(xpow, c);
  return p;
}

const Rational& HomogeneousPoly::coeff(int xpow) const {
  if (xpow < 0 || xpow > degree_) throw std::out_of_range("HomogeneousPoly::coeff");
  return coeffs_[xpow];
}

void HomogeneousPoly::set_coeff(int xpow, const Rational& c) {
  if (xpow < 0 || xpow > degree_) throw std::out_of_range("HomogeneousPoly::set_coeff");
  coeffs_[xpow] = c;
}

bool HomogeneousPoly::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

HomogeneousPoly HomogeneousPoly::operator+(const HomogeneousPoly& o) const {
  if (degree_ != o.degree_) throw std::invalid_argument("HomogeneousPoly: degree mismatch");
  HomogeneousPoly r(degree_);
  for (int i = 0; i <= degree_; ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  return r;
}

HomogeneousPoly HomogeneousPoly::operator-(const HomogeneousPoly& o) const {
  return *this + (-o);
}

HomogeneousPoly HomogeneousPoly::operator-() const {
  HomogeneousPoly r(degree_);
  for (int i = 0; i <= degree_; ++i) r.coeffs_[i] = -coeffs_[i];
  return r;
}

HomogeneousPoly HomogeneousPoly::operator*(const Rational& c) const {
  HomogeneousPoly r(degree_);
  for (int i = 0; i <= degree_; ++i) r.coeffs_[i] = coeffs_[i] * c;
  return r;
}

HomogeneousPoly operator*(const Rational& c, const HomogeneousPoly& p) { return p * c; }

HomogeneousPoly HomogeneousPoly::subst(const Rational& a, const Rational& b,
                                       const Rational& c, const Rational& d) const {
  const int w = degree_;
  // powers of the two linear forms: lin1^j = (aX+bY)^j, lin2^j = (cX+dY)^j
  std::vector<std::vector<Rational>> p1(w + 1), p2(w + 1);
  p1[0] = {Rational(1)};
  p2[0] = {Rational(1)};
  for (int j = 1; j <= w; ++j) {
    p1[j].assign(j + 1, Rational(0));
    p2[j].assign(j + 1, Rational(0));
    for (int i = 0; i < j; ++i) {
      p1[j][i + 1] += p1[j - 1][i] * a;
      p1[j][i] += p1[j - 1][i] * b;
      p2[j][i + 1] += p2[j - 1][i] * c;
      p2[j][i] += p2[j - 1][i] * d;
    }
  }
  HomogeneousPoly r(w);
  for (int j = 0; j <= w; ++j) {
    if (coeffs_[j] == 0) continue;
    const auto& u = p1[j];
    const auto& v = p2[w - j];
    for (int i1 = 0; i1 <= j; ++i1) {
      if (u[i1] == 0) continue;
      for (int i2 = 0; i2 <= w - j; ++i2) {
        if (v[i2] == 0) continue;
        r.coeffs_[i1 + i2] += coeffs_[j] * u[i1] * v[i2];
      }
    }
  }
  return r;
}

HomogeneousPoly HomogeneousPoly::act(const GroupElement& g) const {
  return subst(Rational(g.a()), Rational(g.b()), Rational(g.c()), Rational(g.d()));
}

HomogeneousPoly HomogeneousPoly::act(const GroupRingElement& e) const {
  HomogeneousPoly r(degree_);
  for (const auto& [coeff, g] : e.terms()) r = r + act(g) * Rational(coeff);
  return r;
}

HomogeneousPoly HomogeneousPoly::dx() const {
  if (degree_ == 0) return HomogeneousPoly(0);
  HomogeneousPoly r(degree_ - 1);
  for (int i = 1; i <= degree_; ++i) r.coeffs_[i - 1] = coeffs_[i] * Integer(i);
  return r;
}

HomogeneousPoly HomogeneousPoly::dy() const {
  if (degree_ == 0) return HomogeneousPoly(0);
  HomogeneousPoly r(degree_ - 1);
  for (int i = 0; i < degree_; ++i) r.coeffs_[i] = coeffs_[i] * Integer(degree_ - i);
  return r;
}

HomogeneousPoly HomogeneousPoly::mul_x_div_y() const {
  if (coeffs_[degree_] != 0)
    throw std::domain_error("mul_x_div_y: polynomial not divisible by Y");
  HomogeneousPoly r(degree_);
  for (int i = 0; i < degree_; ++i) r.coeffs_[i + 1] = coeffs_[i];
  return r;
}

std::string HomogeneousPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = degree_; i >= 0; --i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    os << to_fraction_string(coeffs_[i]);
    if (i > 0) os << "*X^" << i;
    if (degree_ - i > 0) os << "*Y^" << (degree_ - i);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace dzv
