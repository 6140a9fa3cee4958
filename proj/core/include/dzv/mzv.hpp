#ifndef DZV_MZV_HPP
#define DZV_MZV_HPP

#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "dzv/bigreal.hpp"
#include "dzv/rational.hpp"
#include "dzv/relations.hpp"

namespace dzv {

struct VerifyReport {
  BigReal residual;
  BigReal max_term;
  bool pass = false;
  long digits = 0;
};

// Multi-precision evaluation of every value family appearing in the
// catalogue, with certified absolute-error bounds.  Inner partial sums are
// taken exactly up to a cutoff and by asymptotic expansion beyond it; outer
// tails are Euler-Maclaurin (alternating series get Boole-type expansions).
// All evaluators are pure given (request, digits); single and double zeta
// values are memoized.
class Evaluator {
 public:
  explicit Evaluator(long digits = 50, long guard_digits = 15);

  long digits() const { return digits_; }
  mpfr_prec_t prec() const { return prec_; }

  BigReal pi();
  BigReal zeta(long k);                 // k >= 2
  BigReal zeta_double(long r, long s);  // r >= 1, s >= 2
  BigReal zeta_half(long r, long s);    // s >= 2, or s == 1 via the harmonic
                                        // regularization zeta(r,1) := -zeta(1,r)-zeta(r+1)
  BigReal zeta_reg_harmonic(long r);    // that regularized zeta(r,1), r >= 2
  BigReal zeta_sh_reg(long m);          // shuffle-regularized zeta^sh(m,1), m >= 2
  BigReal zeta_hat(long r, long s);     // r >= 1, s >= 2
  BigReal t_tilde(long r, long s);      // r, s >= 1
  BigReal t_single(long k);             // T(k) = 2 (1 - 2^-k) zeta(k)
  BigReal j_value(long a, long b, long c);
  BigReal colored2(int a, int b, long r, long s);  // level 2; s >= 2 or (s == 1 && b == 1)
  BigReal colored2_single(int c, long k);          // sum_n (-1)^(cn) n^-k

  BigReal value_of(const DzSymbol& s, ValueKind kind);
  // The single-value carrier of a relation: zeta(k), or T(k) for t_tilde.
  BigReal single_value(ValueKind kind, long k);

  // residual = |sum coeff * value| (+ single part when known); passes iff
  // residual <= max(eps * max(1, max_term), 10 * accumulated error bounds).
  VerifyReport verify(const RelationVector& v, double eps);

  // c with sum_terms coeff*value = c * single_value(kind, weight); the stored
  // single_zeta of a completed relation is -c.
  std::optional<Rational> reconstruct_single(const RelationVector& v, const Integer& maxden);

  // Persistent cache (one file per digit count inside dir); best effort.
  void load_cache(const std::string& dir);
  void save_cache(const std::string& dir) const;

 private:
  long cutoff() const;
  BigReal rat(const Rational& q) const { return BigReal::from_rational(q, prec_); }
  BigReal num(long v) const { return BigReal::from_long(v, prec_); }
  BigReal inv_pow(long n, long e) const;  // n^-e
  // sum_{n>M} [(-1)^n] n^-s E(lam*n) where E is the Euler-Maclaurin expansion
  // of sum_{m >= x} m^-t (half_sign = +1) or sum_{m > x} m^-t (half_sign = -1)
  BigReal tail_with_inner_em(long s, long M, bool outer_alt, long inner_t,
                             const Rational& lam, const Rational& half_sign);

  long digits_, guard_;
  mpfr_prec_t prec_;
  mutable std::mutex mu_;
  std::map<long, BigReal> zeta_cache_;
  std::map<std::pair<long, long>, BigReal> zeta2_cache_;
};

}  // namespace dzv

#endif
