#ifndef DZV_MATRIX_HPP
#define DZV_MATRIX_HPP

#include <optional>
#include <vector>

#include "dzv/rational.hpp"

namespace dzv {

// Dense matrix over Q with exact elimination.  Row reduction is fraction-free
// (Bareiss) on a denominator-cleared copy with first-nonzero pivoting, so all
// derived bases are deterministic across runs.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(int rows, int cols);
  static RationalMatrix identity(int n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
  Rational& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }

  void append_row(const std::vector<Rational>& row);
  std::vector<Rational> row(int i) const;
  RationalMatrix transpose() const;

  int rank() const;

  // Reduced row echelon form; pivot columns returned in order.
  RationalMatrix rref(std::vector<int>* pivot_cols = nullptr) const;

  // Basis of the right null space, one vector per free column (ascending),
  // with the free coordinate set to 1.
  std::vector<std::vector<Rational>> kernel() const;
  std::vector<std::vector<Rational>> left_kernel() const;

  // One exact solution of M x = rhs with free variables set to 0, or nullopt
  // if the system is inconsistent.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& rhs) const;

  bool row_space_contains(const std::vector<Rational>& v) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

}  // namespace dzv

#endif
