#ifndef DZV_DERIVERS_HPP
#define DZV_DERIVERS_HPP

#include <string>
#include <vector>

#include "dzv/formal_dzs.hpp"
#include "dzv/matrix.hpp"
#include "dzv/period_spaces.hpp"
#include "dzv/relations.hpp"

namespace dzv {

enum class RelationFamily {
  gkz,
  ma_odd,
  ma_even,
  cuspidal_half_a,
  cuspidal_half_b,
  cuspidal_half_c,
  hirose_i,
  hirose_ii,
  hirose_iii,
  hirose_iv,
  bachmann,
  kaneko_tsumura,
  colored,
  ck_kernel,
  ttilde_weighted_sum,
  restricted_sum,
};

RelStatus family_status(RelationFamily f);
ValueKind family_value_kind(RelationFamily f);
std::string family_name(RelationFamily f);
RelationFamily parse_family(const std::string& name);

// Theorem recipes.  Every deriver is Q-linear in its polynomial argument and
// returns the raw (unnormalized) relation; use RelationVector::normalize for
// the coprime-integer presentation.

// P in W_{k-2}^+  ->  3 sum_odd a_{r,s} Z_{r,s} - sum_even a_{r,s} Z_{r,s}
//                     - (sum (-1)^r a_{r,s}) Z_k = 0, exact single zeta
RelationVector gkz(const HomogeneousPoly& P);

// P in W_{k-2}^-  ->  sum_{r,s odd} b_{r,s} Z_{r,s+1} + c Z_{k+1} = 0 at
// weight k+1; c recovered exactly through the formal space
RelationVector ma_odd(const HomogeneousPoly& P);

// P in W_{k-2}^+  ->  sum_{r odd} c_{r,s} Z_{r,s} + c Z_{k-1} = 0 at weight k-1
RelationVector ma_even(const HomogeneousPoly& P);

// which = 'a' (needs cuspidal P in W^+), 'b' (P in W^-), 'c' (P in W^+);
// zeta^(1/2) relations with vanishing single-zeta part
RelationVector cuspidal_half(const HomogeneousPoly& P, char which);

// variant 1..4 per the shuffle-regularized J-value theorem; single zeta left
// symbolic (to be recovered numerically)
RelationVector hirose(const HomogeneousPoly& P, int variant);

// P in W_{k-2}^+ -> zeta-hat relation, symbolic single zeta
RelationVector bachmann(const HomogeneousPoly& P);

// expand a J-value relation into convergent double-zeta symbols, replacing
// the shuffle-regularized zeta(m,1) constituents by their closed form
RelationVector expand_to_double_zetas(const RelationVector& jrel);

struct KtOutput {
  RelationVector relation;  // conjectural T~ relation, no single-zeta term
  HomogeneousPoly qplus;
};
KtOutput kaneko_tsumura(const HomogeneousPoly& P, long digits = 60);

// rank of the Q+ image of the level-4 span (the conjectural dimension)
int kt_qplus_rank(int w, long digits = 60);

struct ColoredOutput {
  RelationVector lhs;  // 3 sum e^od Z^{a,b}_{r,s}
  RelationVector rhs;  // -sum e^ev Z - sum e Z^{a+b}_k
};
ColoredOutput colored_deriver(const CosetFunction& F);

struct CkMatrices {
  RationalMatrix cprime;        // (k-1) x (k-3)
  RationalMatrix cdoubleprime;  // (k-1) x (k/2-1)
  std::vector<std::vector<Rational>> left_kernel;
};
CkMatrices ck_matrices(int k);

// the proven weighted sum formula over T~ symbols, T(k) carried as the single
RelationVector ttilde_weighted_sum(int k);

// the 1/4 and 3/4 restricted sum formulas at even weight k
std::vector<RelationVector> restricted_sum(int k);

}  // namespace dzv

#endif
