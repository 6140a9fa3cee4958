#ifndef DZV_FORMAL_DZS_HPP
#define DZV_FORMAL_DZS_HPP

#include <utility>
#include <vector>

#include "dzv/matrix.hpp"
#include "dzv/relations.hpp"

namespace dzv {

// Formal double zeta space D_k: symbols Z_k and Z_{r,s} (r+s = k, r >= 1,
// s >= 2; no Z_{r,1} symbols exist), modulo one double-shuffle row per
// unordered pair {r,s}.  Column order: Z_k, then Z_{1,k-1}, ..., Z_{k-2,2}.
struct DshSystem {
  int k = 0;
  RationalMatrix rows;
  int cols() const { return k - 1; }
  int col_single() const { return 0; }
  int col_double(int r) const;  // r = 1..k-2
  int dim() const;              // corank of the system
};

const DshSystem& dsh_system(int k);  // cached
RationalMatrix dsh_matrix(int k);

// weight-k RelationVector over zeta symbols -> coordinates in the D_k columns
std::vector<Rational> to_dsh_coords(const RelationVector& v);

// s-indices of the odd basis {Z_{k-s,s} : 3 <= s <= k-1 odd}, k even
std::vector<int> odd_basis_s_values(int k);

// exact coordinates of the class of v in the odd basis; throws if the claimed
// basis fails to span D_k
std::vector<Rational> reduce_to_odd_basis(const RelationVector& v);

// true iff v (optionally modulo the Z_k line) lies in the double-shuffle row
// space, i.e. the relation is a consequence of double shuffle
bool is_consequence(const RelationVector& v, bool modulo_single);

// ---- colored (level N) ----

// Symbols: Z^c_k (c in Z/N), Z^{a,b}_{r,s} and P^{a,b}_{r,s} for (a,b) in
// A(N), r+s = k, r,s >= 1.  Two relation rows per ((a,b), r, s).
struct ColoredDshSystem {
  int k = 0, N = 1;
  std::vector<std::pair<int, int>> ab;  // all of A(N)
  RationalMatrix rows;
  int ab_index(int a, int b) const;
  int col_single(int c) const { return ((c % N) + N) % N; }
  int col_Z(int abi, int r) const { return N + abi * (k - 1) + (r - 1); }
  int col_P(int abi, int r) const {
    return N + static_cast<int>(ab.size() + abi) * (k - 1) + (r - 1);
  }
  int cols() const { return N + 2 * static_cast<int>(ab.size()) * (k - 1); }
  int dim() const;
};

const ColoredDshSystem& colored_dsh_system(int k, int N);  // cached
RationalMatrix colored_dsh_matrix(int k, int N);

// generators of P^ev_{k,N} as coordinate vectors
std::vector<std::vector<Rational>> pev_generators(int k, int N);

std::vector<Rational> to_colored_coords(const RelationVector& v);

// membership of v in P^ev_{k,N} modulo the relation system
bool in_pev_subspace(const RelationVector& v);

// equality of two colored vectors in D_{k,N}
bool colored_equivalent(const RelationVector& a, const RelationVector& b);

}  // namespace dzv

#endif
