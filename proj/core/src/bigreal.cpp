#include "dzv/bigreal.hpp"

#include <stdexcept>

namespace dzv {

namespace {
constexpr mpfr_prec_t kErrPrec = 32;

// 2^(exp(x) - prec(x) + 1), an upper bound for the rounding error of x.
void ulp_of(mpfr_t out, mpfr_srcptr x) {
  if (mpfr_zero_p(x)) {
    mpfr_set_zero(out, 1);
    return;
  }
  mpfr_set_ui_2exp(out, 1, mpfr_get_exp(x) - mpfr_get_prec(x) + 1, MPFR_RNDU);
}
}  // namespace

BigReal::BigReal(mpfr_prec_t prec) {
  mpfr_init2(val_, prec);
  mpfr_set_zero(val_, 1);
  mpfr_init2(err_, kErrPrec);
  mpfr_set_zero(err_, 1);
}

BigReal::BigReal(const BigReal& o) {
  mpfr_init2(val_, mpfr_get_prec(o.val_));
  mpfr_set(val_, o.val_, MPFR_RNDN);
  mpfr_init2(err_, kErrPrec);
  mpfr_set(err_, o.err_, MPFR_RNDU);
}

BigReal::BigReal(BigReal&& o) noexcept {
  mpfr_init2(val_, mpfr_get_prec(o.val_));
  mpfr_swap(val_, o.val_);
  mpfr_init2(err_, kErrPrec);
  mpfr_swap(err_, o.err_);
}

BigReal& BigReal::operator=(const BigReal& o) {
  if (this != &o) {
    mpfr_set_prec(val_, mpfr_get_prec(o.val_));
    mpfr_set(val_, o.val_, MPFR_RNDN);
    mpfr_set(err_, o.err_, MPFR_RNDU);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
  mpfr_swap(val_, o.val_);
  mpfr_swap(err_, o.err_);
  return *this;
}

BigReal::~BigReal() {
  mpfr_clear(val_);
  mpfr_clear(err_);
}

void BigReal::bump_rounding(int ternary) {
  if (ternary == 0) return;
  mpfr_t u;
  mpfr_init2(u, kErrPrec);
  ulp_of(u, val_);
  mpfr_add(err_, err_, u, MPFR_RNDU);
  mpfr_clear(u);
}

BigReal BigReal::from_long(long v, mpfr_prec_t prec) {
  BigReal r(prec);
  int t = mpfr_set_si(r.val_, v, MPFR_RNDN);
  r.bump_rounding(t);
  return r;
}

BigReal BigReal::from_rational(const Rational& q, mpfr_prec_t prec) {
  BigReal r(prec);
  int t = mpfr_set_q(r.val_, q.get_mpq_t(), MPFR_RNDN);
  r.bump_rounding(t);
  return r;
}

BigReal BigReal::from_hex(const char* val_hex, const char* err_hex, mpfr_prec_t prec, bool* ok) {
  BigReal r(prec);
  *ok = mpfr_set_str(r.val_, val_hex, 0, MPFR_RNDN) == 0 &&
        mpfr_set_str(r.err_, err_hex, 0, MPFR_RNDU) == 0 && mpfr_sgn(r.err_) >= 0;
  if (!*ok) return BigReal(prec);
  return r;
}

namespace {
std::string hex_of(mpfr_srcptr x) {
  char* s = nullptr;
  mpfr_asprintf(&s, "%Ra", x);
  std::string r(s);
  mpfr_free_str(s);
  return r;
}
}  // namespace

std::string BigReal::to_hex() const { return hex_of(val_); }
std::string BigReal::error_hex() const { return hex_of(err_); }

BigReal BigReal::pi(mpfr_prec_t prec) {
  BigReal r(prec);
  int t = mpfr_const_pi(r.val_, MPFR_RNDN);
  r.bump_rounding(t);
  return r;
}

BigReal BigReal::log2(mpfr_prec_t prec) {
  BigReal r(prec);
  int t = mpfr_const_log2(r.val_, MPFR_RNDN);
  r.bump_rounding(t);
  return r;
}

BigReal BigReal::euler_gamma(mpfr_prec_t prec) {
  BigReal r(prec);
  int t = mpfr_const_euler(r.val_, MPFR_RNDN);
  r.bump_rounding(t);
  return r;
}

BigReal BigReal::operator+(const BigReal& o) const {
  BigReal r(std::max(prec(), o.prec()));
  int t = mpfr_add(r.val_, val_, o.val_, MPFR_RNDN);
  mpfr_add(r.err_, err_, o.err_, MPFR_RNDU);
  r.bump_rounding(t);
  return r;
}

BigReal BigReal::operator-(const BigReal& o) const {
  BigReal r(std::max(prec(), o.prec()));
  int t = mpfr_sub(r.val_, val_, o.val_, MPFR_RNDN);
  mpfr_add(r.err_, err_, o.err_, MPFR_RNDU);
  r.bump_rounding(t);
  return r;
}

BigReal BigReal::operator*(const BigReal& o) const {
  BigReal r(std::max(prec(), o.prec()));
  int t = mpfr_mul(r.val_, val_, o.val_, MPFR_RNDN);
  // |a| e_b + |b| e_a + e_a e_b, all rounded up
  mpfr_t tmp, acc;
  mpfr_init2(tmp, kErrPrec);
  mpfr_init2(acc, kErrPrec);
  mpfr_abs(tmp, val_, MPFR_RNDU);
  mpfr_mul(acc, tmp, o.err_, MPFR_RNDU);
  mpfr_abs(tmp, o.val_, MPFR_RNDU);
  mpfr_mul(tmp, tmp, err_, MPFR_RNDU);
  mpfr_add(acc, acc, tmp, MPFR_RNDU);
  mpfr_mul(tmp, err_, o.err_, MPFR_RNDU);
  mpfr_add(acc, acc, tmp, MPFR_RNDU);
  mpfr_add(r.err_, r.err_, acc, MPFR_RNDU);
  mpfr_clear(tmp);
  mpfr_clear(acc);
  r.bump_rounding(t);
  return r;
}

BigReal BigReal::operator/(const BigReal& o) const {
  // need |o| - err(o) > 0
  mpfr_t blo;
  mpfr_init2(blo, kErrPrec);
  mpfr_abs(blo, o.val_, MPFR_RNDD);
  mpfr_sub(blo, blo, o.err_, MPFR_RNDD);
  if (mpfr_sgn(blo) <= 0) {
    mpfr_clear(blo);
    throw std::domain_error("BigReal: division by a ball containing zero");
  }
  BigReal r(std::max(prec(), o.prec()));
  int t = mpfr_div(r.val_, val_, o.val_, MPFR_RNDN);
  // (e_a + |a/b| e_b) / (|b| - e_b)
  mpfr_t tmp, acc;
  mpfr_init2(tmp, kErrPrec);
  mpfr_init2(acc, kErrPrec);
  mpfr_abs(tmp, r.val_, MPFR_RNDU);
  mpfr_mul(acc, tmp, o.err_, MPFR_RNDU);
  mpfr_add(acc, acc, err_, MPFR_RNDU);
  mpfr_div(acc, acc, blo, MPFR_RNDU);
  mpfr_add(r.err_, r.err_, acc, MPFR_RNDU);
  mpfr_clear(tmp);
  mpfr_clear(acc);
  mpfr_clear(blo);
  r.bump_rounding(t);
  return r;
}

BigReal BigReal::operator-() const {
  BigReal r(*this);
  mpfr_neg(r.val_, r.val_, MPFR_RNDN);
  return r;
}

BigReal BigReal::mul(const Rational& q) const {
  BigReal r(prec());
  if (q == 0) return r;  // exact zero, no radius
  int t = mpfr_mul_q(r.val_, val_, q.get_mpq_t(), MPFR_RNDN);
  mpfr_t aq;
  mpfr_init2(aq, kErrPrec);
  mpfr_set_q(aq, q.get_mpq_t(), MPFR_RNDU);
  mpfr_abs(aq, aq, MPFR_RNDU);
  // one-ulp slack on |q| covers the upward rounding of aq itself
  mpfr_nextabove(aq);
  mpfr_mul(r.err_, err_, aq, MPFR_RNDU);
  mpfr_clear(aq);
  r.bump_rounding(t);
  return r;
}

BigReal BigReal::pow_si(long e) const {
  if (e == 0) return from_long(1, prec());
  BigReal base = *this;
  if (e < 0) base = from_long(1, prec()) / base;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  BigReal r = from_long(1, prec());
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

BigReal BigReal::abs() const {
  BigReal r(*this);
  mpfr_abs(r.val_, r.val_, MPFR_RNDN);
  return r;
}

BigReal BigReal::log() const {
  mpfr_t lo;
  mpfr_init2(lo, kErrPrec);
  mpfr_set(lo, val_, MPFR_RNDD);
  mpfr_sub(lo, lo, err_, MPFR_RNDD);
  if (mpfr_sgn(lo) <= 0) {
    mpfr_clear(lo);
    throw std::domain_error("BigReal::log: ball not strictly positive");
  }
  BigReal r(prec());
  int t = mpfr_log(r.val_, val_, MPFR_RNDN);
  // |log'| <= 1 / lower(x)
  mpfr_t d;
  mpfr_init2(d, kErrPrec);
  mpfr_ui_div(d, 1, lo, MPFR_RNDU);
  mpfr_mul(d, d, err_, MPFR_RNDU);
  mpfr_add(r.err_, r.err_, d, MPFR_RNDU);
  mpfr_clear(d);
  mpfr_clear(lo);
  r.bump_rounding(t);
  return r;
}

BigReal BigReal::exp() const {
  if (mpfr_cmp_d(err_, 0.5) > 0)
    throw std::domain_error("BigReal::exp: error bound too large to propagate");
  BigReal r(prec());
  int t = mpfr_exp(r.val_, val_, MPFR_RNDN);
  // |e^(x+d) - e^x| <= e^x * d * e^d <= 2 |r| d for d <= 0.5
  mpfr_t d;
  mpfr_init2(d, kErrPrec);
  mpfr_abs(d, r.val_, MPFR_RNDU);
  mpfr_mul(d, d, err_, MPFR_RNDU);
  mpfr_mul_ui(d, d, 2, MPFR_RNDU);
  mpfr_add(r.err_, r.err_, d, MPFR_RNDU);
  mpfr_clear(d);
  r.bump_rounding(t);
  return r;
}

BigReal BigReal::sin() const {
  BigReal r(prec());
  int t = mpfr_sin(r.val_, val_, MPFR_RNDN);
  mpfr_add(r.err_, r.err_, err_, MPFR_RNDU);  // |sin'| <= 1
  r.bump_rounding(t);
  return r;
}

BigReal BigReal::cos() const {
  BigReal r(prec());
  int t = mpfr_cos(r.val_, val_, MPFR_RNDN);
  mpfr_add(r.err_, r.err_, err_, MPFR_RNDU);
  r.bump_rounding(t);
  return r;
}

void BigReal::add_error(mpfr_srcptr extra) { mpfr_add(err_, err_, extra, MPFR_RNDU); }

void BigReal::add_error_2exp(long e) {
  mpfr_t u;
  mpfr_init2(u, kErrPrec);
  mpfr_set_ui_2exp(u, 1, e, MPFR_RNDU);
  mpfr_add(err_, err_, u, MPFR_RNDU);
  mpfr_clear(u);
}

bool BigReal::contains_zero() const {
  mpfr_t a;
  mpfr_init2(a, kErrPrec);
  mpfr_abs(a, val_, MPFR_RNDD);
  bool z = mpfr_cmp(a, err_) <= 0;
  mpfr_clear(a);
  return z;
}

bool BigReal::is_exact_zero() const { return mpfr_zero_p(val_) && mpfr_zero_p(err_); }

BigReal BigReal::abs_upper() const {
  BigReal r(prec());
  mpfr_abs(r.val_, val_, MPFR_RNDU);
  mpfr_add(r.val_, r.val_, err_, MPFR_RNDU);
  return r;
}

BigReal BigReal::abs_lower() const {
  BigReal r(prec());
  mpfr_abs(r.val_, val_, MPFR_RNDD);
  mpfr_sub(r.val_, r.val_, err_, MPFR_RNDD);
  if (mpfr_sgn(r.val_) < 0) mpfr_set_zero(r.val_, 1);
  return r;
}

bool BigReal::definitely_le(const BigReal& o) const {
  BigReal a = abs_upper();
  BigReal b = o.abs_lower();
  return mpfr_cmp(a.val_, b.val_) <= 0;
}

std::string BigReal::to_string(size_t digits) const {
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, digits, val_, MPFR_RNDN);
  std::string mant(s);
  mpfr_free_str(s);
  bool neg = !mant.empty() && mant[0] == '-';
  std::string ds = neg ? mant.substr(1) : mant;
  std::string out = (neg ? "-" : "") + ("0." + ds) + "e" + std::to_string(static_cast<long>(e));
  return out;
}

}  // namespace dzv
