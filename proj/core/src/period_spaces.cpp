#include "dzv/period_spaces.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dzv {

namespace {

// scale to coprime integers with the lex-leading (highest X power) positive
void normalize_basis_poly(HomogeneousPoly& p) {
  std::vector<Rational> v = p.coeffs();
  normalize_coprime(v);
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
    if (v[i] != 0) {
      if (v[i] < 0)
        for (auto& c : v) c = -c;
      break;
    }
  }
  p = HomogeneousPoly(p.degree(), v);
}

// rows of the linear map P -> P|E on V_w, in monomial coordinates
void append_action_rows(RationalMatrix& m, int w, const GroupRingElement& e) {
  std::vector<std::vector<Rational>> cols;
  for (int j = 0; j <= w; ++j) cols.push_back(HomogeneousPoly::monomial(w, j).act(e).coeffs());
  for (int row = 0; row <= w; ++row) {
    std::vector<Rational> r(w + 1);
    for (int j = 0; j <= w; ++j) r[j] = cols[j][row];
    m.append_row(r);
  }
}

void append_delta_eigen_rows(RationalMatrix& m, int w, int sign) {
  // P|delta = sign * P: monomial X^j picks up (-1)^j
  for (int j = 0; j <= w; ++j) {
    std::vector<Rational> r(w + 1, Rational(0));
    r[j] = Rational((j % 2 == 0 ? 1 : -1) - sign);
    m.append_row(r);
  }
}

PeriodSpaceBasis from_kernel(int w, int sign, SpaceTag tag, const RationalMatrix& conditions) {
  PeriodSpaceBasis out;
  out.degree = w;
  out.sign = sign;
  out.tag = tag;
  for (auto& v : conditions.kernel()) {
    HomogeneousPoly p(w, v);
    normalize_basis_poly(p);
    out.basis.push_back(std::move(p));
  }
  return out;
}

}  // namespace

long dim_modforms(long k) {
  if (k < 0 || k % 2 == 1) return 0;
  if (k == 0) return 1;
  if (k == 2) return 0;
  return k / 4 - (k - 2) / 6;
}

long dim_cuspforms(long k) {
  long m = dim_modforms(k);
  return m > 0 ? m - 1 : 0;
}

PeriodSpaceBasis basis_W(int w, int sign) {
  if (w < 0 || w % 2 != 0) throw std::invalid_argument("basis_W: w must be even and >= 0");
  if (sign != 1 && sign != -1) throw std::invalid_argument("basis_W: sign must be +-1");
  RationalMatrix cond;
  append_action_rows(cond, w, GroupRingElement::one_plus_S());
  append_action_rows(cond, w, GroupRingElement::one_plus_U_U2());
  append_delta_eigen_rows(cond, w, sign);
  return from_kernel(w, sign, SpaceTag::level1, cond);
}

PeriodSpaceBasis basis_W_plus0(int w) {
  RationalMatrix cond;
  append_action_rows(cond, w, GroupRingElement::one_plus_S());
  append_action_rows(cond, w, GroupRingElement::one_plus_U_U2());
  append_delta_eigen_rows(cond, w, 1);
  std::vector<Rational> top(w + 1, Rational(0));
  top[w] = 1;  // P(X,0) = 0
  cond.append_row(top);
  PeriodSpaceBasis out = from_kernel(w, 1, SpaceTag::level1_plus0, cond);
  return out;
}

bool in_W(const HomogeneousPoly& P, int sign) {
  if (!P.act(GroupRingElement::one_plus_S()).is_zero()) return false;
  if (!P.act(GroupRingElement::one_plus_U_U2()).is_zero()) return false;
  return P.act(GroupElement::delta()) == P * Rational(sign);
}

Rational C_coeff(long p, long r, long s) {
  if (p < 1 || r < 1 || s < 1) throw std::invalid_argument("C_coeff: indices must be positive");
  Rational v = p == r ? 1 : 0;
  Rational b1(binomial(p - 1, r - 1));
  v += (r % 2 == 0) ? b1 : -b1;
  Rational b2(binomial(p - 1, s - 1));
  v += ((p - s) % 2 == 0) ? b2 : -b2;
  return v;
}

bool membership_check_via_C(const HomogeneousPoly& P) {
  const int w = P.degree();
  if (w % 2 != 0) throw std::invalid_argument("membership_check_via_C: odd degree");
  if (!(P.act(GroupElement::delta()) == P))
    throw std::invalid_argument("membership_check_via_C: input not delta-invariant");
  const long k = w + 2;
  // a_{h,p} = coefficient of X^(h-1) Y^(p-1)
  for (long r = 1; r < k; r += 2) {
    long s = k - r;
    if (s % 2 == 0) continue;
    Rational acc = 0;
    for (long h = 1; h <= k - 1; ++h) {
      long p = k - h;
      const Rational& a = P.coeff(static_cast<int>(h - 1));
      if (a != 0) acc += a * C_coeff(p, r, s);
    }
    if (acc != 0) return false;
  }
  return true;
}

namespace {
Rational beta_of(long j) { return -bernoulli(j) / (2 * factorial(j)); }
}  // namespace

Rational lambda_coeff(long r, long s) {
  const long k = r + s;
  if (r < 1 || s < 1 || k < 4 || k % 2 != 0)
    throw std::invalid_argument("lambda_coeff: need r,s >= 1 with r+s even >= 4");
  Rational sgn = (s % 2 == 0) ? 1 : -1;
  Rational first = -beta_of(k) / 12 *
                   (1 - sgn * Rational(binomial(k - 1, s - 1)) + sgn * Rational(binomial(k - 1, s)));
  Rational second = 0;
  for (long j = 2; j <= k; ++j)
    second += Rational(binomial(j - 1, s - 1)) * beta_of(j) * beta_of(k - j);
  return first - sgn / 3 * second;
}

Rational cuspidal_functional(const HomogeneousPoly& P) {
  const long k = P.degree() + 2;
  Rational acc = 0;
  for (long r = 1; r < k; r += 2) {
    long s = k - r;
    if (s % 2 == 0) continue;
    const Rational& a = P.coeff(static_cast<int>(r - 1));
    if (a != 0) acc += factorial(r - 1) * factorial(s - 1) * lambda_coeff(r, s) * a;
  }
  return acc;
}

PeriodSpaceBasis cuspidal_subspace(int w) {
  if (w < 2 || w % 2 != 0) throw std::invalid_argument("cuspidal_subspace: w must be even >= 2");
  RationalMatrix cond;
  append_action_rows(cond, w, GroupRingElement::one_plus_S());
  append_action_rows(cond, w, GroupRingElement::one_plus_U_U2());
  append_delta_eigen_rows(cond, w, 1);
  const long k = w + 2;
  std::vector<Rational> lrow(w + 1, Rational(0));
  for (long r = 1; r < k; r += 2) {
    long s = k - r;
    if (s % 2 == 1) lrow[r - 1] = factorial(r - 1) * factorial(s - 1) * lambda_coeff(r, s);
  }
  cond.append_row(lrow);
  return from_kernel(w, 1, SpaceTag::level1_cuspidal, cond);
}

PeriodSpaceBasis basis_gammaA_minus(int w) {
  if (w < 2 || w % 2 != 0) throw std::invalid_argument("basis_gammaA_minus: w must be even >= 2");
  const GroupElement S = GroupElement::S(), U = GroupElement::U();
  GroupRingElement s_su_su2;
  s_su_su2.add(1, S).add(1, S * U).add(1, S * U * U);
  RationalMatrix cond;
  append_action_rows(cond, w, GroupRingElement::one_plus_U_U2());
  append_action_rows(cond, w, s_su_su2);
  append_delta_eigen_rows(cond, w, -1);
  return from_kernel(w, -1, SpaceTag::gammaA, cond);
}

std::vector<std::pair<int, int>> coset_classes(int N) {
  if (N < 1) throw std::invalid_argument("coset_classes: N must be >= 1");
  std::vector<std::pair<int, int>> reps;
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      if (std::gcd(std::gcd(a, b), N) != 1) continue;
      std::pair<int, int> neg{(N - a) % N, (N - b) % N};
      std::pair<int, int> cur{a, b};
      if (neg < cur) continue;  // keep the lexicographically smaller of +-(a,b)
      reps.push_back(cur);
    }
  }
  return reps;
}

int coset_index(int N, int a, int b) {
  a = ((a % N) + N) % N;
  b = ((b % N) + N) % N;
  std::pair<int, int> cur{a, b}, neg{(N - a) % N, (N - b) % N};
  if (neg < cur) cur = neg;
  auto reps = coset_classes(N);
  auto it = std::lower_bound(reps.begin(), reps.end(), cur);
  if (it == reps.end() || *it != cur) throw std::invalid_argument("coset_index: (a,b) not in A(N)");
  return static_cast<int>(it - reps.begin());
}

CosetFunction coset_act(const CosetFunction& F, const GroupElement& g) {
  const int N = F.level;
  auto reps = coset_classes(N);
  GroupElement gi = g.inverse();
  CosetFunction out;
  out.level = N;
  out.values.reserve(reps.size());
  for (auto [a, b] : reps) {
    // bottom row of C gamma^-1 is (a,b) gamma^-1
    long na = a * gi.a() + b * gi.c();
    long nb = a * gi.b() + b * gi.d();
    int idx = coset_index(N, static_cast<int>(((na % N) + N) % N), static_cast<int>(((nb % N) + N) % N));
    out.values.push_back(F.values[idx].act(g));
  }
  return out;
}

namespace {
CosetFunction coset_act_ring(const CosetFunction& F, const GroupRingElement& e) {
  CosetFunction out;
  out.level = F.level;
  out.values.assign(F.values.size(), HomogeneousPoly(F.degree()));
  for (const auto& [c, g] : e.terms()) {
    CosetFunction t = coset_act(F, g);
    for (size_t i = 0; i < out.values.size(); ++i)
      out.values[i] = out.values[i] + t.values[i] * Rational(c);
  }
  return out;
}

bool coset_zero(const CosetFunction& F) {
  for (const auto& p : F.values)
    if (!p.is_zero()) return false;
  return true;
}
}  // namespace

bool in_levelN_space(const CosetFunction& F, int sign) {
  if (!coset_zero(coset_act_ring(F, GroupRingElement::one_plus_S()))) return false;
  if (!coset_zero(coset_act_ring(F, GroupRingElement::one_plus_U_U2()))) return false;
  const int N = F.level;
  auto reps = coset_classes(N);
  for (size_t i = 0; i < reps.size(); ++i) {
    auto [a, b] = reps[i];
    int j = coset_index(N, a, N - b);
    if (!(F.values[j].act(GroupElement::delta()) == F.values[i] * Rational(sign))) return false;
  }
  return true;
}

PeriodSpaceBasis basis_levelN(int w, int N, int sign) {
  if (w < 0 || w % 2 != 0) throw std::invalid_argument("basis_levelN: w must be even");
  if (sign != 1 && sign != -1) throw std::invalid_argument("basis_levelN: sign must be +-1");
  auto reps = coset_classes(N);
  const int nc = static_cast<int>(reps.size());
  const int dim = nc * (w + 1);  // unknowns: one polynomial per class

  // columns of the constraint matrix are indexed by (class, xpow)
  auto unit = [&](int cls, int xpow) {
    CosetFunction F;
    F.level = N;
    F.values.assign(nc, HomogeneousPoly(w));
    F.values[cls] = HomogeneousPoly::monomial(w, xpow);
    return F;
  };

  RationalMatrix cond(0, dim);
  auto append_coset_rows = [&](auto&& image_of) {
    std::vector<CosetFunction> images;
    images.reserve(dim);
    for (int cls = 0; cls < nc; ++cls)
      for (int xp = 0; xp <= w; ++xp) images.push_back(image_of(unit(cls, xp)));
    for (int cls = 0; cls < nc; ++cls) {
      for (int row = 0; row <= w; ++row) {
        std::vector<Rational> r(dim);
        for (int col = 0; col < dim; ++col) r[col] = images[col].values[cls].coeff(row);
        cond.append_row(r);
      }
    }
  };
  append_coset_rows([&](const CosetFunction& F) { return coset_act_ring(F, GroupRingElement::one_plus_S()); });
  append_coset_rows([&](const CosetFunction& F) { return coset_act_ring(F, GroupRingElement::one_plus_U_U2()); });
  append_coset_rows([&](const CosetFunction& F) {
    // F(C_{a,-b})|delta - sign F(C_{a,b})
    CosetFunction out;
    out.level = N;
    out.values.assign(nc, HomogeneousPoly(w));
    for (int i = 0; i < nc; ++i) {
      auto [a, b] = reps[i];
      int j = coset_index(N, a, N - b);
      out.values[i] = F.values[j].act(GroupElement::delta()) - F.values[i] * Rational(sign);
    }
    return out;
  });

  PeriodSpaceBasis out;
  out.degree = w;
  out.sign = sign;
  out.tag = SpaceTag::levelN;
  out.level = N;
  for (auto& v : cond.kernel()) {
    CosetFunction F;
    F.level = N;
    normalize_coprime(v);
    for (int cls = 0; cls < nc; ++cls) {
      std::vector<Rational> coeffs(v.begin() + static_cast<long>(cls) * (w + 1),
                                   v.begin() + static_cast<long>(cls + 1) * (w + 1));
      F.values.emplace_back(w, std::move(coeffs));
    }
    out.coset_basis.push_back(std::move(F));
  }
  return out;
}

}  // namespace dzv
