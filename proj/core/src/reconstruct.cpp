#include "dzv/reconstruct.hpp"

#include <stdexcept>

namespace dzv {

std::optional<Rational> rational_reconstruct(const BigReal& x, const Integer& max_denominator) {
  if (max_denominator < 1) throw std::invalid_argument("rational_reconstruct: max_denominator < 1");
  if (!mpfr_number_p(x.value())) return std::nullopt;

  Rational X;
  mpfr_get_q(X.get_mpq_t(), x.value());  // exact dyadic midpoint
  Rational tol;
  mpfr_get_q(tol.get_mpq_t(), x.error());
  tol *= 2;

  // continued-fraction convergents of X
  Integer h1 = 1, h2 = 0, k1 = 0, k2 = 1;  // h_{-1}, h_{-2}, k_{-1}, k_{-2}
  Rational y = X;
  for (int iter = 0; iter < 20000; ++iter) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), y.get_num().get_mpz_t(), y.get_den().get_mpz_t());
    Integer h = a * h1 + h2;
    Integer k = a * k1 + k2;
    Rational conv(h, k);
    conv.canonicalize();
    Rational diff = abs(X - conv);
    if (diff <= tol) {
      if (conv.get_den() > max_denominator) return std::nullopt;
      // uniqueness among denominators <= max_denominator: distinct fractions
      // differ by at least 1/(q * max_denominator)
      if (2 * tol * conv.get_den() * max_denominator >= 1 && tol != 0) return std::nullopt;
      return conv;
    }
    if (y == Rational(a)) break;  // CF of a rational terminates
    y = Rational(1) / (y - Rational(a));
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
  }
  return std::nullopt;
}

}  // namespace dzv
