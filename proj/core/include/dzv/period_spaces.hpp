#ifndef DZV_PERIOD_SPACES_HPP
#define DZV_PERIOD_SPACES_HPP

#include <utility>
#include <vector>

#include "dzv/matrix.hpp"
#include "dzv/poly.hpp"

namespace dzv {

enum class SpaceTag { level1, level1_cuspidal, level1_plus0, gammaA, level4span, levelN };

// Polynomial-valued function on the classes A(N) = {(a,b) : gcd(a,b,N)=1}
// modulo (a,b) ~ (-a,-b); values are aligned with coset_classes(N).
struct CosetFunction {
  int level = 1;
  std::vector<HomogeneousPoly> values;
  int degree() const { return values.empty() ? 0 : values[0].degree(); }
  friend bool operator==(const CosetFunction&, const CosetFunction&) = default;
};

struct PeriodSpaceBasis {
  int degree = 0;
  int sign = 0;  // +1 / -1, or 0 when the space carries no sign
  SpaceTag tag = SpaceTag::level1;
  int level = 1;
  std::vector<HomogeneousPoly> basis;      // scalar spaces
  std::vector<CosetFunction> coset_basis;  // level-N spaces
  int dimension() const {
    return static_cast<int>(tag == SpaceTag::levelN ? coset_basis.size() : basis.size());
  }
};

// canonical representatives of A(N)/{+-1}, sorted
std::vector<std::pair<int, int>> coset_classes(int N);
// index of the class of (a,b) in coset_classes(N)
int coset_index(int N, int a, int b);

// dim M_k(Gamma_1) = [k/4] - [(k-2)/6] and dim S_k = dim M_k - 1, k >= 4 even
long dim_modforms(long k);
long dim_cuspforms(long k);

// W_w^{+-} = {P in V_w : P|(1+S) = P|(1+U+U^2) = 0, P|delta = +-P}
PeriodSpaceBasis basis_W(int w, int sign);
// W_w^{+,0} = {P in W_w^+ : P(X,0) = 0}
PeriodSpaceBasis basis_W_plus0(int w);
bool in_W(const HomogeneousPoly& P, int sign);

// C^p_{r,s} = delta_{p,r} + (-1)^r binom(p-1,r-1) + (-1)^(p-s) binom(p-1,s-1)
Rational C_coeff(long p, long r, long s);

// For delta-invariant P of degree w = k-2: P in W^+ iff
// sum_{h+p=k} a_{h,p} C^p_{r,s} = 0 for all odd r,s with r+s=k, where
// P = sum a_{r,s} X^(r-1) Y^(s-1).
bool membership_check_via_C(const HomogeneousPoly& P);

// lambda(r,s) from the cuspidal extra relation; beta(j) = -B_j/(2 j!)
Rational lambda_coeff(long r, long s);
// the Kohnen-Zagier functional sum (r-1)!(s-1)! lambda(r,s) a_{r,s} on W^+
Rational cuspidal_functional(const HomogeneousPoly& P);

// kernel of the cuspidal functional inside W_w^+
PeriodSpaceBasis cuspidal_subspace(int w);

// W_{w,Gamma_A}^- = {P in V_w^- : P|(1+U+U^2) = P|(S+SU+SU^2) = 0}
PeriodSpaceBasis basis_gammaA_minus(int w);

// Generators of the level-4 span W_{w,4}^+ (j = 1..w/2; the family has rank
// w/2 - 1) and the span itself.  digits controls the precision of the
// value-functional reconstruction used in the construction.
HomogeneousPoly stilde(int w, int j, long digits = 60);
PeriodSpaceBasis span_W4plus(int w, long digits = 60);

// Level-N coset-function spaces (Pasol-Popa style)
PeriodSpaceBasis basis_levelN(int w, int N, int sign);
// right action (F|gamma)(C) = F(C gamma^-1)|gamma
CosetFunction coset_act(const CosetFunction& F, const GroupElement& g);
bool in_levelN_space(const CosetFunction& F, int sign);

}  // namespace dzv

#endif
