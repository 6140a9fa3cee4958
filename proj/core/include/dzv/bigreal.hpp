#ifndef DZV_BIGREAL_HPP
#define DZV_BIGREAL_HPP

#include <mpfr.h>

#include <string>

#include "dzv/rational.hpp"

namespace dzv {

// Multi-precision real with a tracked absolute-error bound (ball arithmetic).
// The midpoint is an mpfr number at the working precision; the radius is a
// low-precision mpfr number maintained with upward rounding, so every bound
// is conservative.  Rounding of the midpoint itself is folded into the
// radius after each operation.
class BigReal {
 public:
  explicit BigReal(mpfr_prec_t prec = 128);
  BigReal(const BigReal& o);
  BigReal(BigReal&& o) noexcept;
  BigReal& operator=(const BigReal& o);
  BigReal& operator=(BigReal&& o) noexcept;
  ~BigReal();

  static BigReal from_long(long v, mpfr_prec_t prec);
  static BigReal from_rational(const Rational& q, mpfr_prec_t prec);
  // hex-float round trip (the persistent cache format); nullopt-like zero on parse failure
  static BigReal from_hex(const char* val_hex, const char* err_hex, mpfr_prec_t prec, bool* ok);
  std::string to_hex() const;
  std::string error_hex() const;
  static BigReal pi(mpfr_prec_t prec);
  static BigReal log2(mpfr_prec_t prec);
  static BigReal euler_gamma(mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(val_); }
  mpfr_srcptr value() const { return val_; }
  mpfr_srcptr error() const { return err_; }

  BigReal operator+(const BigReal& o) const;
  BigReal operator-(const BigReal& o) const;
  BigReal operator*(const BigReal& o) const;
  BigReal operator/(const BigReal& o) const;  // throws if the divisor ball straddles 0
  BigReal operator-() const;
  BigReal& operator+=(const BigReal& o) { return *this = *this + o; }
  BigReal& operator-=(const BigReal& o) { return *this = *this - o; }
  BigReal& operator*=(const BigReal& o) { return *this = *this * o; }

  BigReal mul(const Rational& q) const;  // exact rational scaling
  BigReal pow_si(long e) const;
  BigReal abs() const;
  BigReal log() const;
  BigReal exp() const;
  BigReal sin() const;
  BigReal cos() const;

  void add_error(mpfr_srcptr extra);
  void add_error_2exp(long e);  // add 2^e to the radius

  bool contains_zero() const;
  bool is_exact_zero() const;
  // |value| +/- error as exact-radius balls (for comparisons)
  BigReal abs_upper() const;
  BigReal abs_lower() const;
  // true iff upper(|this|) <= lower(|o|) with o >= 0
  bool definitely_le(const BigReal& o) const;

  double to_double() const { return mpfr_get_d(val_, MPFR_RNDN); }
  double error_double() const { return mpfr_get_d(err_, MPFR_RNDU); }
  std::string to_string(size_t digits) const;

 private:
  void bump_rounding(int ternary);
  mpfr_t val_;
  mpfr_t err_;
};

}  // namespace dzv

#endif
