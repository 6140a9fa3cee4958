#include "dzv/mzv.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dzv/reconstruct.hpp"
#include "emtails.hpp"

namespace dzv {

using detail::tail_log;
using detail::tail_log_alt;
using detail::tail_pow;
using detail::tail_pow_alt;

Evaluator::Evaluator(long digits, long guard_digits) : digits_(digits), guard_(guard_digits) {
  if (digits_ < 10) digits_ = 10;
  prec_ = static_cast<mpfr_prec_t>(static_cast<double>(digits_ + guard_) * 3.321928095 + 40);
}

long Evaluator::cutoff() const { return std::max(48L, (digits_ + guard_) * 6 / 5); }

BigReal Evaluator::pi() { return BigReal::pi(prec_); }

BigReal Evaluator::inv_pow(long n, long e) const {
  return (num(1) / num(n)).pow_si(e);
}

BigReal Evaluator::zeta(long k) {
  if (k < 2) throw std::invalid_argument("zeta: k must be >= 2");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = zeta_cache_.find(k);
    if (it != zeta_cache_.end()) return it->second;
  }
  BigReal z(prec_);
  if (k % 2 == 0) {
    // zeta(2m) = (-1)^(m+1) B_2m (2 pi)^2m / (2 (2m)!)
    Rational coef = bernoulli(k) * pow_rational(Rational(2), k) / (2 * factorial(k));
    if ((k / 2) % 2 == 0) coef = -coef;
    z = pi().pow_si(k).mul(coef);
  } else {
    const long M = cutoff();
    BigReal acc(prec_);
    for (long n = 1; n <= M; ++n) acc += inv_pow(n, k);
    z = acc + tail_pow(k, M, prec_);
  }
  std::lock_guard<std::mutex> lock(mu_);
  return zeta_cache_.try_emplace(k, z).first->second;
}

namespace {
bool contrib_small(const BigReal& contrib, mpfr_prec_t prec) {
  BigReal cu = contrib.abs_upper();
  return mpfr_zero_p(cu.value()) || mpfr_get_exp(cu.value()) < -static_cast<long>(prec) - 6;
}
}  // namespace

// sum_{n>M} [(-1)^n]? n^-s times the Euler-Maclaurin expansion of the inner
// tail sum_{m >= lam*n} m^-t (half_sign +1) or sum_{m > lam*n} (half_sign -1),
// evaluated termwise against outer power tails.  The remainder of the inner
// expansion is bounded against the plain (absolute) outer tail.
BigReal Evaluator::tail_with_inner_em(long s, long M, bool outer_alt, long inner_t,
                                      const Rational& lam, const Rational& half_sign) {
  const long t = inner_t;
  auto TP = [&](long u) {
    return outer_alt ? tail_pow_alt(s + u, M, prec_) : tail_pow(s + u, M, prec_);
  };
  Rational ilam = Rational(1) / lam;
  BigReal acc = TP(t - 1).mul(pow_rational(ilam, t - 1) / Rational(t - 1)) +
                TP(t).mul(half_sign * pow_rational(ilam, t) / 2);
  Integer rising = t;  // (t)_{2j-1}
  Integer fact = 2;    // (2j)!
  Rational lampow = pow_rational(ilam, t + 1);
  Rational ilam2 = ilam * ilam;
  BigReal last(prec_);
  for (long j = 1; j <= 900; ++j) {
    Rational c = bernoulli(2 * j) / fact * rising * lampow;
    BigReal contrib = TP(t + 2 * j - 1).mul(c);
    bool growing = j > 2 && last.abs_upper().definitely_le(contrib.abs_upper());
    if (contrib_small(contrib, prec_) || growing) {
      // first omitted inner terms, summed in absolute value
      BigReal bound = tail_pow(s + t + 2 * j - 1, M, prec_).mul(abs(c) * 4);
      acc.add_error(bound.abs_upper().value());
      return acc;
    }
    acc += contrib;
    last = contrib;
    rising *= Integer(t + 2 * j - 1) * Integer(t + 2 * j);
    fact *= Integer(2 * j + 1) * Integer(2 * j + 2);
    lampow *= ilam2;
  }
  throw std::runtime_error("tail_with_inner_em: did not terminate");
}

namespace {
// sum_{n>M} eps(n) n^-s phi_t(n), eps = 1 or (-1)^n, phi_t the alternating
// inner-tail expansion with coefficients d_u.  d_u vanishes at every other
// index, so a stop needs three consecutive sub-target terms.
BigReal tail_with_inner_phi(long s, long M, bool outer_alt, long t, mpfr_prec_t prec) {
  auto TP = [&](long u) {
    return outer_alt ? tail_pow_alt(s + u, M, prec) : tail_pow(s + u, M, prec);
  };
  BigReal acc(prec);
  BigReal last(prec);
  bool has_last = false;
  int smalls = 0;
  for (int u = 0; u <= 900; ++u) {
    Rational du = detail::alt_tail_coeff(t, u);
    BigReal contrib = TP(t + u).mul(du);
    bool small = contrib_small(contrib, prec);
    bool growing = !small && has_last && u > 2 && last.abs_upper().definitely_le(contrib.abs_upper());
    smalls = small ? smalls + 1 : 0;
    if ((small && smalls >= 3) || growing) {
      Rational cb = abs(du);
      for (int v = u + 1; v <= u + 2; ++v) {
        Rational dv = abs(detail::alt_tail_coeff(t, v));
        if (dv > cb) cb = dv;
      }
      BigReal bound = tail_pow(s + t + u, M, prec).mul(cb * 4);
      acc.add_error(bound.abs_upper().value());
      return acc;
    }
    acc += contrib;
    if (!small) {
      last = contrib;
      has_last = true;
    }
  }
  throw std::runtime_error("tail_with_inner_phi: did not terminate");
}
}  // namespace

BigReal Evaluator::zeta_double(long r, long s) {
  if (r < 1) throw std::invalid_argument("zeta_double: r must be >= 1");
  if (s < 2) throw std::invalid_argument("zeta_double: s must be >= 2 (divergent otherwise)");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = zeta2_cache_.find({r, s});
    if (it != zeta2_cache_.end()) return it->second;
  }
  const long M = cutoff();
  // direct part over the inner variable m: zeta(r,s) = sum_m m^-r T_s(m),
  // T_s(m) = sum_{n>m} n^-s built by downward recurrence from the tail at M
  BigReal T = tail_pow(s, M, prec_);
  BigReal direct(prec_);
  for (long m = M; m >= 1; --m) {
    direct += inv_pow(m, r) * T;
    if (m > 1) T += inv_pow(m, s);
  }
  BigReal tail = tail_with_inner_em(r, M, false, s, Rational(1), Rational(-1));
  BigReal z = direct + tail;
  std::lock_guard<std::mutex> lock(mu_);
  return zeta2_cache_.try_emplace({r, s}, z).first->second;
}

BigReal Evaluator::zeta_reg_harmonic(long r) {
  if (r < 2) throw std::invalid_argument("zeta_reg_harmonic: r must be >= 2");
  return -zeta_double(1, r) - zeta(r + 1);
}

BigReal Evaluator::zeta_half(long r, long s) {
  if (r < 1 || s < 1 || (r == 1 && s == 1))
    throw std::invalid_argument("zeta_half: bad indices");
  if (s >= 2) return zeta_double(r, s) + zeta(r + s).mul(Rational(1, 2));
  return zeta_reg_harmonic(r) + zeta(r + 1).mul(Rational(1, 2));
}

BigReal Evaluator::zeta_sh_reg(long m) {
  if (m < 2) throw std::invalid_argument("zeta_sh_reg: m must be >= 2");
  BigReal acc = zeta_double(1, m).mul(Rational(-2));
  for (long j = 1; j <= m - 2; ++j) acc -= zeta_double(j + 1, m - j);
  return acc;
}

BigReal Evaluator::zeta_hat(long r, long s) {
  if (r < 1 || s < 2) throw std::invalid_argument("zeta_hat: need r >= 1, s >= 2");
  const long M = cutoff();
  // prefix sums of j^-r up to 2M-1
  std::vector<BigReal> P;
  P.reserve(2 * M);
  P.emplace_back(prec_);  // P[0] = 0
  for (long i = 1; i <= 2 * M - 1; ++i) P.push_back(P.back() + inv_pow(i, r));
  BigReal direct(prec_);
  for (long n = 2; n <= M; ++n) direct += inv_pow(n, s) * (P[2 * n - 1] - P[n]);

  BigReal tail(prec_);
  if (r >= 2) {
    // inner(n) = T_r(n) - t_r(2n)
    tail = tail_with_inner_em(s, M, false, r, Rational(1), Rational(-1)) -
           tail_with_inner_em(s, M, false, r, Rational(2), Rational(1));
  } else {
    // inner(n) = H_{2n-1} - H_n = ln2 - (3/4)/n + sum_j (B_2j/2j)(1-2^-2j) n^-2j
    tail = BigReal::log2(prec_) * tail_pow(s, M, prec_) -
           tail_pow(s + 1, M, prec_).mul(Rational(3, 4));
    BigReal last(prec_);
    for (long j = 1; j <= 700; ++j) {
      Rational c = bernoulli(2 * j) / Rational(2 * j) * (1 - pow_rational(Rational(1, 2), 2 * j));
      BigReal contrib = tail_pow(s + 2 * j, M, prec_).mul(c);
      BigReal cu = contrib.abs_upper();
      bool small = mpfr_zero_p(cu.value()) ||
                   mpfr_get_exp(cu.value()) < -static_cast<long>(prec_) - 6;
      bool growing = j > 2 && last.abs_upper().definitely_le(cu);
      if (small || growing) {
        BigReal bound = tail_pow(s + 2 * j, M, prec_).mul(abs(c) * 8);
        tail.add_error(bound.abs_upper().value());
        break;
      }
      tail += contrib;
      last = contrib;
    }
  }
  return direct + tail;
}

BigReal Evaluator::t_tilde(long r, long s) {
  if (r < 1 || s < 1) throw std::invalid_argument("t_tilde: indices must be positive");
  const long M = cutoff();
  // T~(r,s) = 2^(2-s) sum_nu (-1)^(nu-1) nu^-s O_r(nu), O_r(nu) = sum_{j<=nu} (2j-1)^-r
  BigReal O(prec_), direct(prec_);
  for (long nu = 1; nu <= M; ++nu) {
    O += inv_pow(2 * nu - 1, r);
    BigReal term = inv_pow(nu, s) * O;
    direct += (nu % 2 == 1) ? term : -term;
  }
  BigReal tail(prec_);
  if (r >= 2) {
    // O_r(nu) = lambda_r - [t_r(2 nu) - 2^-r t_r(nu)]
    BigReal lambda = zeta(r).mul(1 - pow_rational(Rational(1, 2), r));
    tail = lambda * tail_pow_alt(s, M, prec_) -
           tail_with_inner_em(s, M, true, r, Rational(2), Rational(1)) +
           tail_with_inner_em(s, M, true, r, Rational(1), Rational(1)).mul(
               pow_rational(Rational(1, 2), r));
    tail = -tail;  // outer sign is (-1)^(nu-1)
  } else {
    // O_1(nu) = (1/2) ln nu + (ln2 + gamma/2) + sum_j (B_2j/2j)(1/2 - 2^-2j) nu^-2j
    BigReal C = BigReal::log2(prec_) + BigReal::euler_gamma(prec_).mul(Rational(1, 2));
    BigReal inner = tail_log_alt(s, M, prec_).mul(Rational(1, 2)) + C * tail_pow_alt(s, M, prec_);
    BigReal last(prec_);
    for (long j = 1; j <= 700; ++j) {
      Rational c = bernoulli(2 * j) / Rational(2 * j) *
                   (Rational(1, 2) - pow_rational(Rational(1, 2), 2 * j));
      BigReal contrib = tail_pow_alt(s + 2 * j, M, prec_).mul(c);
      BigReal cu = contrib.abs_upper();
      bool small = mpfr_zero_p(cu.value()) ||
                   mpfr_get_exp(cu.value()) < -static_cast<long>(prec_) - 6;
      bool growing = j > 2 && last.abs_upper().definitely_le(cu);
      if (small || growing) {
        BigReal bound = tail_pow(s + 2 * j, M, prec_).mul(abs(c) * 8);
        inner.add_error(bound.abs_upper().value());
        break;
      }
      inner += contrib;
      last = contrib;
    }
    tail = -inner;
  }
  return (direct + tail).mul(pow_rational(Rational(2), 2 - s));
}

BigReal Evaluator::t_single(long k) {
  if (k < 2) throw std::invalid_argument("t_single: k must be >= 2");
  return zeta(k).mul(2 * (1 - pow_rational(Rational(1, 2), k)));
}

BigReal Evaluator::j_value(long a, long b, long c) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("j_value: negative index");
  if (a == 0 && b == 0 && c == 0) throw std::invalid_argument("j_value: J(0;0,0) diverges");
  BigReal acc(prec_);
  for (long i = 0; i <= a; ++i) {
    long j = a - i;
    Rational coef = Rational(binomial(b + i, i)) * Rational(binomial(c + j, j));
    long rr = b + i + 1, ss = c + j + 1;
    BigReal v = (ss == 1) ? zeta_sh_reg(rr) : zeta_double(rr, ss);
    acc += v.mul(coef);
  }
  if (a % 2 == 1) acc = -acc;
  return acc;
}

BigReal Evaluator::colored2(int a, int b, long r, long s) {
  a = ((a % 2) + 2) % 2;
  b = ((b % 2) + 2) % 2;
  if (r < 1 || s < 1) throw std::invalid_argument("colored2: indices must be positive");
  if (s == 1 && b == 0)
    throw std::domain_error("colored2: (s,b) = (1,0) diverges");
  if (a == 0 && b == 0) return zeta_double(r, s);

  const long M = cutoff();
  BigReal I(prec_), direct(prec_);
  for (long n = 2; n <= M; ++n) {
    long m = n - 1;
    BigReal mt = inv_pow(m, r);
    I += (a == 1 && m % 2 == 1) ? -mt : mt;
    BigReal term = inv_pow(n, s) * I;
    direct += (b == 1 && n % 2 == 1) ? -term : term;
  }

  const bool alt = (b == 1);
  auto TP = [&](long u) { return alt ? tail_pow_alt(u, M, prec_) : tail_pow(u, M, prec_); };
  BigReal tail(prec_);
  if (a == 0) {
    if (r >= 2) {
      // I(n) = zeta(r) - t_r(n)
      tail = zeta(r) * TP(s) - tail_with_inner_em(s, M, alt, r, Rational(1), Rational(1));
    } else {
      // I(n) = H_{n-1} = ln n + gamma - 1/(2n) - sum_j (B_2j/2j) n^-2j
      tail = (alt ? tail_log_alt(s, M, prec_) : tail_log(s, M, prec_)) +
             BigReal::euler_gamma(prec_) * TP(s) - TP(s + 1).mul(Rational(1, 2));
      BigReal last(prec_);
      for (long j = 1; j <= 700; ++j) {
        Rational c = -bernoulli(2 * j) / Rational(2 * j);
        BigReal contrib = TP(s + 2 * j).mul(c);
        BigReal cu = contrib.abs_upper();
        bool small = mpfr_zero_p(cu.value()) ||
                     mpfr_get_exp(cu.value()) < -static_cast<long>(prec_) - 6;
        bool growing = j > 2 && last.abs_upper().definitely_le(cu);
        if (small || growing) {
          BigReal bound = tail_pow(s + 2 * j, M, prec_).mul(abs(c) * 4);
          tail.add_error(bound.abs_upper().value());
          break;
        }
        tail += contrib;
        last = contrib;
      }
    }
  } else {
    // I(n) = c_r - (-1)^n phi_r(n)
    BigReal cr = (r == 1) ? -BigReal::log2(prec_)
                          : zeta(r).mul(pow_rational(Rational(1, 2), r - 1) - 1);
    // (-1)^(bn) * (-1)^n: plain when b == 1, alternating when b == 0
    tail = cr * TP(s) - tail_with_inner_phi(s, M, !alt, r, prec_);
  }
  return direct + tail;
}

BigReal Evaluator::colored2_single(int c, long k) {
  c = ((c % 2) + 2) % 2;
  if (c == 0) return zeta(k);
  return zeta(k).mul(pow_rational(Rational(1, 2), k - 1) - 1);
}

BigReal Evaluator::value_of(const DzSymbol& s, ValueKind kind) {
  switch (kind) {
    case ValueKind::zeta:
      return zeta_double(s.i1, s.i2);
    case ValueKind::zeta_half:
      return zeta_half(s.i1, s.i2);
    case ValueKind::zeta_hat:
      return zeta_hat(s.i1, s.i2);
    case ValueKind::t_tilde:
      return t_tilde(s.i1, s.i2);
    case ValueKind::j_value:
      return j_value(s.i1, s.i2, s.i3);
    case ValueKind::colored:
      if (s.i2 == 0) return colored2_single(s.c1, s.i1);
      return colored2(s.c1, s.c2, s.i1, s.i2);
  }
  throw std::logic_error("value_of: unknown kind");
}

BigReal Evaluator::single_value(ValueKind kind, long k) {
  return kind == ValueKind::t_tilde ? t_single(k) : zeta(k);
}

VerifyReport Evaluator::verify(const RelationVector& v, double eps) {
  if (!v.single_zeta)
    throw std::invalid_argument("verify: symbolic single-zeta coefficient; reconstruct first");
  BigReal acc(prec_);
  BigReal maxterm(prec_);
  auto feed = [&](const BigReal& val, const Rational& coeff) {
    BigReal term = val.mul(coeff);
    acc += term;
    BigReal u = term.abs_upper();
    if (mpfr_cmp(u.value(), maxterm.value()) > 0) maxterm = u;
  };
  for (const auto& [sym, coeff] : v.terms) feed(value_of(sym, v.kind), coeff);
  if (*v.single_zeta != 0) feed(single_value(v.kind, v.weight), *v.single_zeta);

  VerifyReport rep{acc.abs(), maxterm, false, digits_};
  mpfr_t thr, tmp;
  mpfr_init2(thr, 64);
  mpfr_init2(tmp, 64);
  mpfr_set_d(thr, eps, MPFR_RNDU);
  if (mpfr_cmp_ui(maxterm.value(), 1) > 0) mpfr_mul(thr, thr, maxterm.value(), MPFR_RNDU);
  mpfr_mul_ui(tmp, acc.error(), 10, MPFR_RNDU);
  if (mpfr_cmp(tmp, thr) > 0) mpfr_set(thr, tmp, MPFR_RNDU);
  BigReal resid_up = acc.abs_upper();
  rep.pass = mpfr_cmp(resid_up.value(), thr) <= 0;
  mpfr_clear(thr);
  mpfr_clear(tmp);
  return rep;
}

std::optional<Rational> Evaluator::reconstruct_single(const RelationVector& v,
                                                      const Integer& maxden) {
  BigReal acc(prec_);
  for (const auto& [sym, coeff] : v.terms) acc += value_of(sym, v.kind).mul(coeff);
  BigReal ratio = acc / single_value(v.kind, v.weight);
  return rational_reconstruct(ratio, maxden);
}

void Evaluator::load_cache(const std::string& dir) {
  std::ifstream in(std::filesystem::path(dir) / ("mzv-" + std::to_string(digits_) + ".cache"));
  if (!in) return;
  std::string tag;
  while (in >> tag) {
    long i1 = 0, i2 = 0;
    std::string vs, es;
    if (tag == "z")
      in >> i1 >> vs >> es;
    else if (tag == "zz")
      in >> i1 >> i2 >> vs >> es;
    else
      break;
    if (!in) break;
    bool ok = false;
    BigReal v = BigReal::from_hex(vs.c_str(), es.c_str(), prec_, &ok);
    if (!ok) continue;
    std::lock_guard<std::mutex> lock(mu_);
    if (tag == "z")
      zeta_cache_.try_emplace(i1, v);
    else
      zeta2_cache_.try_emplace(std::make_pair(i1, i2), v);
  }
}

void Evaluator::save_cache(const std::string& dir) const {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream out(std::filesystem::path(dir) / ("mzv-" + std::to_string(digits_) + ".cache"));
  if (!out) return;
  std::lock_guard<std::mutex> lock(mu_);
  for (const auto& [k, v] : zeta_cache_)
    out << "z " << k << " " << v.to_hex() << " " << v.error_hex() << "\n";
  for (const auto& [rs, v] : zeta2_cache_)
    out << "zz " << rs.first << " " << rs.second << " " << v.to_hex() << " " << v.error_hex()
        << "\n";
}

}  // namespace dzv
