#ifndef DZV_RELATIONS_HPP
#define DZV_RELATIONS_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dzv/rational.hpp"

namespace dzv {

// Which value family the symbols of a relation refer to.
enum class ValueKind { zeta, zeta_half, zeta_hat, t_tilde, j_value, colored };

enum class RelStatus { proven, conjectural };

// A symbol in a relation.  Interpretation depends on the owning vector's
// ValueKind:
//   zeta / zeta_half / zeta_hat : (i1,i2) = (r,s)
//   t_tilde                     : (i1,i2) = (r,s)
//   j_value                     : (i1,i2,i3) = (a,b,c) of J(a;b,c)
//   colored                     : (i1,i2) = (r,s) with colors (c1,c2);
//                                 the single symbols Z_k^c use i2 = 0, c1 = c.
struct DzSymbol {
  int i1 = 0, i2 = 0, i3 = -1;
  int c1 = -1, c2 = -1;
  friend auto operator<=>(const DzSymbol&, const DzSymbol&) = default;
};

DzSymbol sym_rs(int r, int s);
DzSymbol sym_j(int a, int b, int c);
DzSymbol sym_colored(int r, int s, int a, int b);
DzSymbol sym_colored_single(int k, int c);

std::string symbol_name(const DzSymbol& s, ValueKind kind);

// Exact linear combination of symbols plus a single-zeta coefficient, read as
//   sum_i coeff_i * value(sym_i) + single_zeta * V(weight) = 0,
// where V is zeta(k) for most families and T(k) for t_tilde.  A missing
// single_zeta means "symbolic": the relation holds modulo Q*V(k) and the
// constant is to be recovered numerically.
struct RelationVector {
  int weight = 0;
  int level = 1;
  ValueKind kind = ValueKind::zeta;
  RelStatus status = RelStatus::proven;
  std::map<DzSymbol, Rational> terms;
  std::optional<Rational> single_zeta = Rational(0);

  void add(const DzSymbol& s, const Rational& c);
  bool terms_zero() const;

  // Scales so the symbol coefficients are coprime integers with the first
  // (in symbol order) positive; single_zeta is scaled along.  No-op on zero.
  RelationVector& normalize();

  // Sign flip only: first nonzero symbol coefficient made positive.
  RelationVector& orient();

  std::vector<Rational> coefficients() const;  // in symbol order
  std::string to_string() const;
};

}  // namespace dzv

#endif
