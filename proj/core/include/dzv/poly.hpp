#ifndef DZV_POLY_HPP
#define DZV_POLY_HPP

#include <string>
#include <vector>

#include "dzv/group.hpp"
#include "dzv/rational.hpp"

namespace dzv {

// Degree-w homogeneous polynomial in X, Y over Q, stored densely:
// coeff(a) is the coefficient of X^a Y^(w-a).
class HomogeneousPoly {
 public:
  explicit HomogeneousPoly(int degree);
  HomogeneousPoly(int degree, std::vector<Rational> coeffs);
  static HomogeneousPoly monomial(int degree, int xpow, const Rational& c = Rational(1));

  int degree() const { return degree_; }
  const Rational& coeff(int xpow) const;
  void set_coeff(int xpow, const Rational& c);
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  HomogeneousPoly operator+(const HomogeneousPoly& o) const;
  HomogeneousPoly operator-(const HomogeneousPoly& o) const;
  HomogeneousPoly operator-() const;
  HomogeneousPoly operator*(const Rational& c) const;
  friend bool operator==(const HomogeneousPoly&, const HomogeneousPoly&) = default;

  // P(aX+bY, cX+dY), the substitution underlying everything else here.
  HomogeneousPoly subst(const Rational& a, const Rational& b,
                        const Rational& c, const Rational& d) const;

  // Right actions (P|g)(X,Y) = P(aX+bY, cX+dY) and its group-ring extension.
  HomogeneousPoly act(const GroupElement& g) const;
  HomogeneousPoly act(const GroupRingElement& e) const;

  HomogeneousPoly dx() const;  // d/dX, degree drops by one
  HomogeneousPoly dy() const;  // d/dY

  // (X/Y) * P; throws unless Y divides P.
  HomogeneousPoly mul_x_div_y() const;

  // Coordinates of P in the monomial basis Y^w, X Y^(w-1), ..., X^w.
  std::vector<Rational> to_vector() const { return coeffs_; }

  std::string to_string() const;

 private:
  int degree_;
  std::vector<Rational> coeffs_;
};

HomogeneousPoly operator*(const Rational& c, const HomogeneousPoly& p);

}  // namespace dzv

#endif
