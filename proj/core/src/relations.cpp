#include "dzv/relations.hpp"

#include <sstream>

namespace dzv {

DzSymbol sym_rs(int r, int s) { return DzSymbol{r, s, -1, -1, -1}; }
DzSymbol sym_j(int a, int b, int c) { return DzSymbol{a, b, c, -1, -1}; }
DzSymbol sym_colored(int r, int s, int a, int b) { return DzSymbol{r, s, -1, a, b}; }
DzSymbol sym_colored_single(int k, int c) { return DzSymbol{k, 0, -1, c, -1}; }

std::string symbol_name(const DzSymbol& s, ValueKind kind) {
  std::ostringstream os;
  switch (kind) {
    case ValueKind::zeta:
      os << "Z(" << s.i1 << "," << s.i2 << ")";
      break;
    case ValueKind::zeta_half:
      os << "zh(" << s.i1 << "," << s.i2 << ")";
      break;
    case ValueKind::zeta_hat:
      os << "zhat(" << s.i1 << "," << s.i2 << ")";
      break;
    case ValueKind::t_tilde:
      os << "Tt(" << s.i1 << "," << s.i2 << ")";
      break;
    case ValueKind::j_value:
      os << "J(" << s.i1 << ";" << s.i2 << "," << s.i3 << ")";
      break;
    case ValueKind::colored:
      if (s.i2 == 0)
        os << "Z^" << s.c1 << "(" << s.i1 << ")";
      else
        os << "Z^{" << s.c1 << "," << s.c2 << "}(" << s.i1 << "," << s.i2 << ")";
      break;
  }
  return os.str();
}

void RelationVector::add(const DzSymbol& s, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

bool RelationVector::terms_zero() const { return terms.empty(); }

RelationVector& RelationVector::normalize() {
  std::vector<Rational> v = coefficients();
  Rational f = normalize_coprime(v);
  if (f != 1) {
    size_t i = 0;
    for (auto& [s, c] : terms) c = v[i++];
    if (single_zeta) *single_zeta *= f;
  }
  return *this;
}

RelationVector& RelationVector::orient() {
  for (const auto& [s, c] : terms) {
    if (c == 0) continue;
    if (c < 0) {
      for (auto& [s2, c2] : terms) c2 = -c2;
      if (single_zeta) *single_zeta = -*single_zeta;
    }
    break;
  }
  return *this;
}

std::vector<Rational> RelationVector::coefficients() const {
  std::vector<Rational> v;
  v.reserve(terms.size());
  for (const auto& [s, c] : terms) v.push_back(c);
  return v;
}

std::string RelationVector::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms) {
    if (!first) os << " + ";
    os << to_fraction_string(c) << "*" << symbol_name(s, kind);
    first = false;
  }
  if (single_zeta) {
    if (*single_zeta != 0) {
      if (!first) os << " + ";
      os << to_fraction_string(*single_zeta) << "*"
         << (kind == ValueKind::t_tilde ? "T(" : "zeta(") << weight << ")";
      first = false;
    }
  } else {
    os << " + c*zeta(" << weight << ")";
    first = false;
  }
  if (first) os << "0";
  os << " = 0";
  return os.str();
}

}  // namespace dzv
