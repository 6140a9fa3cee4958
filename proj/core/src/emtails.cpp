#include "emtails.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace dzv::detail {

namespace {

bool below_target(const BigReal& term, mpfr_prec_t prec) {
  BigReal u = term.abs_upper();
  if (mpfr_zero_p(u.value())) return true;
  return mpfr_get_exp(u.value()) < -static_cast<long>(prec) - 6;
}

std::mutex coeff_mutex;
std::map<long, std::vector<Rational>> alt_coeff_cache;

struct AltLogCoeffs {
  std::vector<Rational> p, q;
};
std::map<long, AltLogCoeffs> alt_log_coeff_cache;

void extend_alt_coeffs(long t, std::vector<Rational>& d, int count) {
  for (int w = static_cast<int>(d.size()); w < count; ++w) {
    Rational acc = w == 0 ? Rational(1) : Rational(0);
    for (int u = 0; u < w; ++u) {
      Rational b(binomial(t + w - 1, w - u));
      if ((w - u) % 2 == 1) b = -b;
      acc -= d[u] * b;
    }
    d.push_back(acc / 2);
  }
}

void extend_alt_log_coeffs(long t, AltLogCoeffs& c, int count) {
  extend_alt_coeffs(t, c.p, count);
  for (int w = static_cast<int>(c.q.size()); w < count; ++w) {
    Rational acc = 0;
    for (int u = 0; u < w; ++u) {
      Rational b(binomial(t + w - 1, w - u));
      if ((w - u) % 2 == 1) b = -b;
      acc -= c.q[u] * b;
      Rational inner = 0;
      for (int ip = 1; ip <= w - u; ++ip) {
        Rational lam(1, ip);
        if (ip % 2 == 0) lam = -lam;
        Rational bb(binomial(t + w - ip - 1, w - u - ip));
        if ((w - u - ip) % 2 == 1) bb = -bb;
        inner += lam * bb;
      }
      acc -= c.p[u] * inner;
    }
    c.q.push_back(acc / 2);
  }
}

}  // namespace

bool StreamAccum::feed(const BigReal& term) {
  if (finished_) return false;
  ++idx_;
  BigReal u = term.abs_upper();
  bool small = below_target(term, prec_);
  if (!small && has_last_ && idx_ > 3 && last_.abs_upper().definitely_le(u)) {
    // nonzero terms started to grow: remainder <= 4x first omitted
    mpfr_t b;
    mpfr_init2(b, 32);
    mpfr_mul_ui(b, u.value(), 4, MPFR_RNDU);
    acc_.add_error(b);
    mpfr_clear(b);
    finished_ = true;
    return false;
  }
  if (small) {
    if (++smalls_ >= 3) {
      // three consecutive sub-target terms: the envelope has decayed; allow
      // a generous 32x target for whatever follows
      acc_ += term;
      acc_.add_error_2exp(-static_cast<long>(prec_) - 1);
      finished_ = true;
      return false;
    }
  } else {
    smalls_ = 0;
  }
  acc_ += term;
  if (!small) {
    last_ = term;
    has_last_ = true;
  }
  return true;
}

Rational alt_tail_coeff(long t, int u) {
  std::lock_guard<std::mutex> lock(coeff_mutex);
  auto& d = alt_coeff_cache[t];
  extend_alt_coeffs(t, d, u + 1);
  return d[u];
}

BigReal tail_pow(long t, long N, mpfr_prec_t prec) {
  if (t < 2) throw std::invalid_argument("tail_pow: t must be >= 2");
  const long a = N + 1;
  BigReal ia = BigReal::from_long(1, prec) / BigReal::from_long(a, prec);
  StreamAccum acc(prec);
  // integral + boundary: a^(1-t)/(t-1) + a^(-t)/2, then the B_2j corrections
  acc.feed(ia.pow_si(t - 1).mul(Rational(1, t - 1)));
  acc.feed(ia.pow_si(t).mul(Rational(1, 2)));
  BigReal apow = ia.pow_si(t + 1);
  BigReal ia2 = ia * ia;
  Integer rising = t;  // (t)_{2j-1}
  Integer fact = 2;    // (2j)!
  for (long j = 1; j <= 900; ++j) {
    if (!acc.feed(apow.mul(bernoulli(2 * j) / fact * rising))) return acc.value();
    rising *= Integer(t + 2 * j - 1) * Integer(t + 2 * j);
    fact *= Integer(2 * j + 1) * Integer(2 * j + 2);
    apow = apow * ia2;
  }
  throw std::runtime_error("tail_pow: expansion did not terminate");
}

BigReal tail_log(long t, long N, mpfr_prec_t prec) {
  if (t < 2) throw std::invalid_argument("tail_log: t must be >= 2");
  const long a = N + 1;
  BigReal ab = BigReal::from_long(a, prec);
  BigReal la = ab.log();
  BigReal ia = BigReal::from_long(1, prec) / ab;
  StreamAccum acc(prec);
  // integral: a^(1-t) (ln a/(t-1) + 1/(t-1)^2); boundary: a^(-t) ln a / 2
  acc.feed(ia.pow_si(t - 1) * (la.mul(Rational(1, t - 1)) +
                               BigReal::from_rational(Rational(1, (t - 1) * (t - 1)), prec)));
  acc.feed(ia.pow_si(t).mul(Rational(1, 2)) * la);
  // f^(m)(x) = x^(-t-m) (alpha_m ln x + beta_m)
  Rational alpha = -Rational(t), beta = 1;  // m = 1
  Integer fact = 2;                         // (2j)!
  BigReal apow = ia.pow_si(t + 1);
  BigReal ia2 = ia * ia;
  for (long j = 1; j <= 900; ++j) {
    BigReal term = (la.mul(alpha) + BigReal::from_rational(beta, prec)) * apow;
    if (!acc.feed(term.mul(-bernoulli(2 * j) / fact))) return acc.value();
    for (long m = 2 * j - 1; m <= 2 * j; ++m) {
      Rational na = -Rational(t + m) * alpha;
      beta = alpha - Rational(t + m) * beta;
      alpha = na;
    }
    fact *= Integer(2 * j + 1) * Integer(2 * j + 2);
    apow = apow * ia2;
  }
  throw std::runtime_error("tail_log: expansion did not terminate");
}

BigReal tail_pow_alt(long t, long N, mpfr_prec_t prec) {
  if (t < 1) throw std::invalid_argument("tail_pow_alt: t must be >= 1");
  const long a = N + 1;
  BigReal ia = BigReal::from_long(1, prec) / BigReal::from_long(a, prec);
  BigReal apow = ia.pow_si(t);
  StreamAccum acc(prec);
  for (int u = 0; u <= 900; ++u) {
    if (!acc.feed(apow.mul(alt_tail_coeff(t, u)))) {
      BigReal r = acc.value();
      if ((N + 1) % 2 == 1) r = -r;  // leading sign (-1)^(N+1)
      return r;
    }
    apow = apow * ia;
  }
  throw std::runtime_error("tail_pow_alt: expansion did not terminate");
}

BigReal tail_log_alt(long t, long N, mpfr_prec_t prec) {
  if (t < 1) throw std::invalid_argument("tail_log_alt: t must be >= 1");
  const long a = N + 1;
  BigReal ab = BigReal::from_long(a, prec);
  BigReal la = ab.log();
  BigReal ia = BigReal::from_long(1, prec) / ab;
  BigReal apow = ia.pow_si(t);
  StreamAccum acc(prec);
  for (int u = 0; u <= 900; ++u) {
    Rational pu, qu;
    {
      std::lock_guard<std::mutex> lock(coeff_mutex);
      auto& c = alt_log_coeff_cache[t];
      extend_alt_log_coeffs(t, c, u + 1);
      pu = c.p[u];
      qu = c.q[u];
    }
    if (!acc.feed((la.mul(pu) + BigReal::from_rational(qu, prec)) * apow)) {
      BigReal r = acc.value();
      if ((N + 1) % 2 == 1) r = -r;
      return r;
    }
    apow = apow * ia;
  }
  throw std::runtime_error("tail_log_alt: expansion did not terminate");
}

}  // namespace dzv::detail
