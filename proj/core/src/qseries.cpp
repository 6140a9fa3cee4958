#include "dzv/qseries.hpp"

#include <stdexcept>

namespace dzv {

BigComplex BigComplex::inv() const {
  BigReal n2 = re * re + im * im;
  return {re / n2, -im / n2};
}

BigComplex BigComplex::pow_si(long e) const {
  BigComplex base = e < 0 ? inv() : *this;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  BigComplex r(re.prec());
  r.re = BigReal::from_long(1, re.prec());
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

BigReal BigComplex::abs_upper() const { return re.abs_upper() + im.abs_upper(); }

QSeriesEngine::QSeriesEngine(long digits) : ev_(digits) {}

Integer QSeriesEngine::sigma(long k, long n) {
  Integer acc = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) acc += pow_rational(Rational(d), k).get_num();
  return acc;
}

Integer QSeriesEngine::g2_rational(long k1, long k2, long n) {
  // sum over l1 < l2, n1, n2 > 0 with l1 n1 + l2 n2 = n of n1^(k1-1) n2^(k2-1)
  Integer acc = 0;
  for (long l2 = 2; l2 < n; ++l2) {
    for (long n2 = 1; l2 * n2 < n; ++n2) {
      long rem = n - l2 * n2;
      Integer f2 = pow_rational(Rational(n2), k2 - 1).get_num();
      for (long l1 = 1; l1 < l2; ++l1) {
        if (rem % l1 != 0) continue;
        long n1 = rem / l1;
        acc += pow_rational(Rational(n1), k1 - 1).get_num() * f2;
      }
    }
  }
  return acc;
}

Integer QSeriesEngine::gstar_rational(long k, long n) {
  Integer acc = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) acc += Integer(n / d) * pow_rational(Rational(d), k).get_num();
  return acc;
}

BigComplex QSeriesEngine::pow_m2pii(long j) {
  const mpfr_prec_t p = prec();
  while (static_cast<long>(pow2pi_.size()) <= j) {
    if (pow2pi_.empty())
      pow2pi_.push_back(BigReal::from_long(1, p));
    else
      pow2pi_.push_back(pow2pi_.back() * ev_.pi().mul(Rational(2)));
  }
  // (-2 pi i)^j = (2 pi)^j * (-i)^j
  BigComplex out(p);
  const BigReal& m = pow2pi_[j];
  switch (((j % 4) + 4) % 4) {
    case 0: out.re = m; break;
    case 1: out.im = -m; break;
    case 2: out.re = -m; break;
    case 3: out.im = m; break;
  }
  return out;
}

BigComplex QSeriesEngine::g_coeff(long k, long n) {
  if (n == 0) return BigComplex(prec());
  return pow_m2pii(k).mul(Rational(sigma(k - 1, n), factorial(k - 1)));
}

BigComplex QSeriesEngine::g2_coeff(long k1, long k2, long n) {
  if (n == 0) return BigComplex(prec());
  Rational c(g2_rational(k1, k2, n), factorial(k1 - 1) * factorial(k2 - 1));
  return pow_m2pii(k1 + k2).mul(c);
}

BigComplex QSeriesEngine::gstar_coeff(long k, long n) {
  if (n == 0) return BigComplex(prec());
  return -pow_m2pii(k + 1).mul(Rational(gstar_rational(k, n), factorial(k)));
}

BigComplex QSeriesEngine::eps_coeff(long r, long s, long n) {
  // 2 pi i (delta_{s,2} g*_r - delta_{s,1} g*_{r-1} + delta_{r,1}(g*_{s-1} + g_s))
  //   + delta_{r,1} delta_{s,1} g_2
  BigComplex acc(prec());
  if (s == 2) acc = acc + gstar_coeff(r, n);
  if (s == 1) acc = acc - gstar_coeff(r - 1, n);
  if (r == 1) acc = acc + gstar_coeff(s - 1, n) + g_coeff(s, n);
  acc = -(pow_m2pii(1) * acc);  // 2 pi i = -(-2 pi i)
  if (r == 1 && s == 1) acc = acc + g_coeff(2, n);
  return acc;
}

BigComplex QSeriesEngine::G_coeff(long k, long n) {
  BigComplex out(prec());
  if (n == 0) {
    out.re = ev_.zeta(k);
    return out;
  }
  return pow_m2pii(k).mul(Rational(sigma(k - 1, n), factorial(k - 1)));
}

BigComplex QSeriesEngine::Greg_coeff(long r, long s, long n) {
  if (r < 1 || s < 1 || r + s < 3) throw std::invalid_argument("Greg_coeff: need r+s >= 3");
  BigComplex out(prec());
  if (n == 0) {
    out.re = (s >= 2) ? ev_.zeta_double(r, s) : ev_.zeta_reg_harmonic(r);
    return out;
  }
  // zeta(r) g_s + g_{r,s} + eps/2 + sum_{h+p=k} C-weighted zeta(p) g_h,
  // with zeta(1) := 0 throughout
  if (r >= 2) out = out + g_coeff(s, n).mul(ev_.zeta(r));
  out = out + g2_coeff(r, s, n) + eps_coeff(r, s, n).mul(Rational(1, 2));
  const long k = r + s;
  for (long p = 2; p <= k - 1; ++p) {
    const long h = k - p;
    Rational b1(binomial(p - 1, r - 1));
    if (r % 2 == 1) b1 = -b1;
    Rational b2(binomial(p - 1, s - 1));
    if ((p - s) % 2 != 0) b2 = -b2;
    Rational c = b1 + b2;
    if (c == 0) continue;
    out = out + g_coeff(h, n).mul(ev_.zeta(p)).mul(c);
  }
  return out;
}

BigComplex QSeriesEngine::Ghalf_coeff(long r, long s, long n) {
  return Greg_coeff(r, s, n) + G_coeff(r + s, n).mul(Rational(1, 2));
}

std::vector<Integer> QSeriesEngine::delta_qexp(int M) {
  std::vector<Integer> c(M + 1, Integer(0));
  if (M >= 1) c[1] = 1;  // q
  for (int n = 1; n <= M; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      for (int i = M; i >= n; --i) c[i] -= c[i - n];
    }
  }
  return c;
}

std::vector<Integer> QSeriesEngine::e4_qexp(int M) {
  std::vector<Integer> c(M + 1, Integer(0));
  c[0] = 1;
  for (int n = 1; n <= M; ++n) c[n] = 240 * sigma(3, n);
  return c;
}

std::vector<Integer> QSeriesEngine::s16_qexp(int M) {
  auto d = delta_qexp(M);
  auto e = e4_qexp(M);
  std::vector<Integer> c(M + 1, Integer(0));
  for (int i = 0; i <= M; ++i)
    for (int j = 0; i + j <= M; ++j) c[i + j] += d[i] * e[j];
  return c;
}

QSeriesEngine::HeckeReport QSeriesEngine::verify_hecke(int weight, int M, double tol) {
  struct Term {
    long r, s;
    long coeff;
  };
  std::vector<Term> terms;
  Rational prefactor;
  std::vector<Integer> form;
  if (weight == 12) {
    terms = {{9, 3, 22680}, {7, 5, -35364}, {5, 7, -29145}, {3, 9, 13006}, {1, 11, 22680}};
    // the displayed constant 680 fails coefficient-wise; 640 verifies exactly
    prefactor = Rational(1, 640);
    form = delta_qexp(M);
  } else if (weight == 16) {
    terms = {{1, 15, 1081080},  {3, 13, 842358},  {5, 11, -275295}, {7, 9, -1400182},
             {9, 7, -1360395},  {11, 5, -351252}, {13, 3, 1081080}};
    prefactor = Rational(1, 322560);
    form = s16_qexp(M);
  } else {
    throw std::invalid_argument("verify_hecke: weight must be 12 or 16");
  }

  HeckeReport rep;
  rep.digits = ev_.digits();
  rep.pass = true;
  // (2 pi i)^k = (-1)^k (-2 pi i)^k = (-2 pi i)^k for even k
  BigComplex lead = pow_m2pii(weight).mul(prefactor);
  for (int n = 0; n <= M; ++n) {
    BigComplex lhs = lead.mul(Rational(form[n]));
    BigComplex rhs(prec());
    BigReal maxterm(prec());
    for (const auto& t : terms) {
      BigComplex term = Ghalf_coeff(t.r, t.s, n).mul(Rational(t.coeff));
      rhs = rhs + term;
      BigReal u = term.abs_upper();
      if (mpfr_cmp(u.value(), maxterm.value()) > 0) maxterm = u;
    }
    BigReal resid = (lhs - rhs).abs_upper();
    if (mpfr_cmp_ui(maxterm.value(), 1) > 0) resid = resid / maxterm;
    rep.residuals.push_back(resid);
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_set_d(t, tol, MPFR_RNDU);
    if (mpfr_cmp(resid.value(), t) > 0) rep.pass = false;
    mpfr_clear(t);
  }
  return rep;
}

}  // namespace dzv
