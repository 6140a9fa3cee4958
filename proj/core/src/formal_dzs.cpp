#include "dzv/formal_dzs.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace dzv {

int DshSystem::col_double(int r) const {
  if (r < 1 || r > k - 2) throw std::out_of_range("DshSystem::col_double");
  return r;  // column 0 is Z_k
}

int DshSystem::dim() const { return cols() - rows.rank(); }

RationalMatrix dsh_matrix(int k) { return dsh_system(k).rows; }

namespace {
std::mutex dsh_mutex;
std::map<int, DshSystem> dsh_cache;
std::map<std::pair<int, int>, ColoredDshSystem> colored_cache;

DshSystem build_dsh(int k) {
  DshSystem sys;
  sys.k = k;
  RationalMatrix m(0, k - 1);
  for (int r = k - 1; r >= 1; --r) {
    int s = k - r;
    if (s > r) break;  // rows for r >= s >= 1 only
    // net coefficients over Z_k and Z_{h,p} including p = 1, then project
    std::vector<Rational> full(k + 1, Rational(0));  // index p for Z_{k-p,p}, [0] = Z_k
    full[0] += 1;
    full[s] += 1;  // Z_{r,s} has p = s
    full[r] += 1;  // Z_{s,r} has p = r
    for (int p = 1; p <= k - 1; ++p) {
      Rational c = Rational(binomial(p - 1, r - 1)) + Rational(binomial(p - 1, s - 1));
      full[p] -= c;
    }
    if (full[1] != 0)
      throw std::logic_error("dsh row: Z_{k-1,1} coefficient did not cancel");
    std::vector<Rational> row(k - 1, Rational(0));
    row[0] = full[0];
    for (int p = 2; p <= k - 1; ++p) row[k - p] = full[p];  // column r = h = k - p
    m.append_row(row);
  }
  sys.rows = std::move(m);
  return sys;
}
}  // namespace

const DshSystem& dsh_system(int k) {
  if (k < 3) throw std::invalid_argument("dsh_system: k must be >= 3");
  std::lock_guard<std::mutex> lock(dsh_mutex);
  auto it = dsh_cache.find(k);
  if (it == dsh_cache.end()) it = dsh_cache.emplace(k, build_dsh(k)).first;
  return it->second;
}

std::vector<Rational> to_dsh_coords(const RelationVector& v) {
  if (v.kind != ValueKind::zeta && v.kind != ValueKind::zeta_half && v.kind != ValueKind::zeta_hat)
    throw std::invalid_argument("to_dsh_coords: not a zeta-symbol relation");
  const int k = v.weight;
  std::vector<Rational> x(k - 1, Rational(0));
  for (const auto& [sym, c] : v.terms) {
    if (sym.i1 + sym.i2 != k) throw std::invalid_argument("to_dsh_coords: weight mismatch");
    if (sym.i2 < 2) throw std::invalid_argument("to_dsh_coords: Z_{r,1} symbol not in D_k");
    x[sym.i1] += c;
  }
  if (v.single_zeta) x[0] += *v.single_zeta;
  return x;
}

std::vector<int> odd_basis_s_values(int k) {
  std::vector<int> s;
  for (int i = 3; i <= k - 1; i += 2) s.push_back(i);
  return s;
}

std::vector<Rational> reduce_to_odd_basis(const RelationVector& v) {
  const int k = v.weight;
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("reduce_to_odd_basis: k must be even >= 4");
  const DshSystem& sys = dsh_system(k);
  auto svals = odd_basis_s_values(k);
  const int nb = static_cast<int>(svals.size());
  const int nr = sys.rows.rows();
  // columns: [basis vectors | relation rows^T]; solve M x = coords(v)
  RationalMatrix M(k - 1, nb + nr);
  for (int b = 0; b < nb; ++b) M.at(sys.col_double(k - svals[b]), b) = 1;
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < k - 1; ++c) M.at(c, nb + r) = sys.rows.at(r, c);
  if (M.rank() != k - 1)
    throw std::logic_error("reduce_to_odd_basis: claimed odd basis does not span D_k");
  auto sol = M.solve(to_dsh_coords(v));
  if (!sol) throw std::logic_error("reduce_to_odd_basis: inconsistent system");
  return {sol->begin(), sol->begin() + nb};
}

bool is_consequence(const RelationVector& v, bool modulo_single) {
  const DshSystem& sys = dsh_system(v.weight);
  RationalMatrix m = sys.rows;
  if (modulo_single) {
    std::vector<Rational> e(sys.cols(), Rational(0));
    e[sys.col_single()] = 1;
    m.append_row(e);
  }
  return m.row_space_contains(to_dsh_coords(v));
}

// ---- colored ----

int ColoredDshSystem::ab_index(int a, int b) const {
  a = ((a % N) + N) % N;
  b = ((b % N) + N) % N;
  for (size_t i = 0; i < ab.size(); ++i)
    if (ab[i].first == a && ab[i].second == b) return static_cast<int>(i);
  throw std::invalid_argument("ColoredDshSystem: (a,b) not in A(N)");
}

int ColoredDshSystem::dim() const { return cols() - rows.rank(); }

RationalMatrix colored_dsh_matrix(int k, int N) { return colored_dsh_system(k, N).rows; }

namespace {
ColoredDshSystem build_colored(int k, int N) {
  ColoredDshSystem sys;
  sys.k = k;
  sys.N = N;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      if (std::gcd(std::gcd(a, b), N) == 1) sys.ab.emplace_back(a, b);

  RationalMatrix m(0, sys.cols());
  for (auto [a, b] : sys.ab) {
    const int abi = sys.ab_index(a, b);
    for (int r = 1; r <= k - 1; ++r) {
      const int s = k - r;
      // P^{a,b}_{r,s} = Z^{a,b}_{r,s} + Z^{b,a}_{s,r} + Z^{a+b}_k
      std::vector<Rational> row1(sys.cols(), Rational(0));
      row1[sys.col_P(abi, r)] += 1;
      row1[sys.col_Z(abi, r)] -= 1;
      row1[sys.col_Z(sys.ab_index(b, a), s)] -= 1;
      row1[sys.col_single(a + b)] -= 1;
      m.append_row(row1);
      // P^{a,b}_{r,s} = sum_{h+p=k} (binom(p-1,r-1) Z^{b-a,a}_{h,p} + binom(p-1,s-1) Z^{a-b,b}_{h,p})
      std::vector<Rational> row2(sys.cols(), Rational(0));
      row2[sys.col_P(abi, r)] += 1;
      const int i1 = sys.ab_index(b - a, a), i2 = sys.ab_index(a - b, b);
      for (int h = 1; h <= k - 1; ++h) {
        const int p = k - h;
        row2[sys.col_Z(i1, h)] -= Rational(binomial(p - 1, r - 1));
        row2[sys.col_Z(i2, h)] -= Rational(binomial(p - 1, s - 1));
      }
      m.append_row(row2);
    }
  }
  sys.rows = std::move(m);
  return sys;
}
}  // namespace

const ColoredDshSystem& colored_dsh_system(int k, int N) {
  if (k < 2 || N < 1) throw std::invalid_argument("colored_dsh_system: need k >= 2, N >= 1");
  std::lock_guard<std::mutex> lock(dsh_mutex);
  auto key = std::make_pair(k, N);
  auto it = colored_cache.find(key);
  if (it == colored_cache.end()) it = colored_cache.emplace(key, build_colored(k, N)).first;
  return it->second;
}

std::vector<std::vector<Rational>> pev_generators(int k, int N) {
  const ColoredDshSystem& sys = colored_dsh_system(k, N);
  std::vector<std::vector<Rational>> gens;
  for (int c = 0; c < N; ++c) {
    std::vector<Rational> g(sys.cols(), Rational(0));
    g[sys.col_single(c)] += 1;
    g[sys.col_single(-c)] += (k % 2 == 0) ? 1 : -1;
    gens.push_back(std::move(g));
  }
  for (auto [a, b] : sys.ab) {
    for (int r = 1; r <= k - 1; ++r) {
      const int s = k - r;
      std::vector<Rational> g(sys.cols(), Rational(0));
      g[sys.col_P(sys.ab_index(a, b), r)] += 1;
      g[sys.col_P(sys.ab_index(-a, b), r)] += (r % 2 == 0) ? 1 : -1;
      g[sys.col_P(sys.ab_index(a, -b), r)] += (s % 2 == 0) ? 1 : -1;
      g[sys.col_P(sys.ab_index(-a, -b), r)] += ((r + s) % 2 == 0) ? 1 : -1;
      gens.push_back(std::move(g));
    }
  }
  return gens;
}

std::vector<Rational> to_colored_coords(const RelationVector& v) {
  if (v.kind != ValueKind::colored)
    throw std::invalid_argument("to_colored_coords: not a colored relation");
  const ColoredDshSystem& sys = colored_dsh_system(v.weight, v.level);
  std::vector<Rational> x(sys.cols(), Rational(0));
  for (const auto& [sym, c] : v.terms) {
    if (sym.i2 == 0) {
      if (sym.i1 != v.weight) throw std::invalid_argument("to_colored_coords: weight mismatch");
      x[sys.col_single(sym.c1)] += c;
    } else {
      if (sym.i1 + sym.i2 != v.weight)
        throw std::invalid_argument("to_colored_coords: weight mismatch");
      x[sys.col_Z(sys.ab_index(sym.c1, sym.c2), sym.i1)] += c;
    }
  }
  return x;
}

bool in_pev_subspace(const RelationVector& v) {
  const ColoredDshSystem& sys = colored_dsh_system(v.weight, v.level);
  RationalMatrix m = sys.rows;
  for (auto& g : pev_generators(v.weight, v.level)) m.append_row(g);
  return m.row_space_contains(to_colored_coords(v));
}

bool colored_equivalent(const RelationVector& a, const RelationVector& b) {
  if (a.weight != b.weight || a.level != b.level)
    throw std::invalid_argument("colored_equivalent: mismatched spaces");
  const ColoredDshSystem& sys = colored_dsh_system(a.weight, a.level);
  auto xa = to_colored_coords(a), xb = to_colored_coords(b);
  for (size_t i = 0; i < xa.size(); ++i) xa[i] -= xb[i];
  return sys.rows.row_space_contains(xa);
}

}  // namespace dzv
