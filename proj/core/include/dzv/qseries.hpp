#ifndef DZV_QSERIES_HPP
#define DZV_QSERIES_HPP

#include <vector>

#include "dzv/mzv.hpp"

namespace dzv {

struct BigComplex {
  BigReal re, im;
  explicit BigComplex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}

  BigComplex operator+(const BigComplex& o) const { return {re + o.re, im + o.im}; }
  BigComplex operator-(const BigComplex& o) const { return {re - o.re, im - o.im}; }
  BigComplex operator-() const { return {-re, -im}; }
  BigComplex operator*(const BigComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  BigComplex mul(const Rational& q) const { return {re.mul(q), im.mul(q)}; }
  BigComplex mul(const BigReal& x) const { return {re * x, im * x}; }
  BigComplex inv() const;
  BigComplex pow_si(long e) const;
  BigReal abs_upper() const;  // |re| + |im| upper bound, radius folded in
};

// Fourier-coefficient engine for (regularized, half-shifted) double
// Eisenstein series.  Every g / g* coefficient is an exact rational divisor
// sum times a power of (-2 pi i); the transcendental factor enters only when
// a coefficient is evaluated.
class QSeriesEngine {
 public:
  explicit QSeriesEngine(long digits = 60);

  mpfr_prec_t prec() const { return ev_.prec(); }
  Evaluator& evaluator() { return ev_; }

  // exact rational parts
  static Integer sigma(long k, long n);               // sum_{d|n} d^k
  static Integer g2_rational(long k1, long k2, long n);
  static Integer gstar_rational(long k, long n);      // sum_{d|n} (n/d) d^k

  BigComplex pow_m2pii(long j);  // (-2 pi i)^j

  BigComplex g_coeff(long k, long n);                  // depth-1 g-series
  BigComplex g2_coeff(long k1, long k2, long n);       // depth-2 g-series
  BigComplex gstar_coeff(long k, long n);
  BigComplex eps_coeff(long r, long s, long n);
  BigComplex G_coeff(long k, long n);                  // classical G_k
  BigComplex Greg_coeff(long r, long s, long n);
  BigComplex Ghalf_coeff(long r, long s, long n);

  // integer q-expansions up to q^M
  static std::vector<Integer> delta_qexp(int M);
  static std::vector<Integer> e4_qexp(int M);
  static std::vector<Integer> s16_qexp(int M);  // E_4 * Delta, normalized

  struct HeckeReport {
    std::vector<BigReal> residuals;  // |LHS_n - RHS_n| / max(1, max |term|)
    bool pass = false;
    long digits = 0;
  };
  // weight 12 or 16, coefficients n = 0..M, tolerance on normalized residuals
  HeckeReport verify_hecke(int weight, int M, double tol);

 private:
  Evaluator ev_;
  std::vector<BigReal> pow2pi_;  // (2 pi)^j
};

}  // namespace dzv

#endif
