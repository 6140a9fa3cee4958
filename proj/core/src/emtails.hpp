#ifndef DZV_EMTAILS_HPP
#define DZV_EMTAILS_HPP

#include "dzv/bigreal.hpp"
#include "dzv/rational.hpp"

// Certified tails of slowly convergent series, shared by the mzv evaluators.
// Every asymptotic expansion here is consumed through StreamAccum, which
// enforces one stopping policy: terminate after three consecutive terms below
// the absolute target 2^-(prec+6) (coefficient streams may contain exact
// zeros, so a single small term proves nothing), or as soon as the nonzero
// terms start growing; 4x the first omitted term is added to the radius.
namespace dzv::detail {

class StreamAccum {
 public:
  explicit StreamAccum(mpfr_prec_t prec) : prec_(prec), acc_(prec), last_(prec) {}

  // Feeds the next term; returns false once the stream is finished (the term
  // fed is treated as first omitted and folded into the error bound).
  bool feed(const BigReal& term);
  const BigReal& value() const { return acc_; }
  bool finished() const { return finished_; }

 private:
  mpfr_prec_t prec_;
  BigReal acc_, last_;
  int smalls_ = 0;
  long idx_ = 0;
  bool has_last_ = false;
  bool finished_ = false;
};

// sum_{n>N} n^-t, t >= 2  (Euler-Maclaurin at N+1)
BigReal tail_pow(long t, long N, mpfr_prec_t prec);

// sum_{n>N} n^-t ln n, t >= 2
BigReal tail_log(long t, long N, mpfr_prec_t prec);

// sum_{n>N} (-1)^n n^-t, t >= 1  (Boole-type expansion)
BigReal tail_pow_alt(long t, long N, mpfr_prec_t prec);

// sum_{n>N} (-1)^n n^-t ln n, t >= 1
BigReal tail_log_alt(long t, long N, mpfr_prec_t prec);

// Coefficient d_u of the alternating-tail expansion
//   sum_{i>=0} (-1)^i (n+i)^{-t} ~ sum_u d_u n^{-t-u},
// determined by phi(n) + phi(n+1) = n^-t.  Cached per t.
Rational alt_tail_coeff(long t, int u);

}  // namespace dzv::detail

#endif
