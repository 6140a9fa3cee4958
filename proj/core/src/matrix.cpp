#include "dzv/matrix.hpp"

#include <stdexcept>

namespace dzv {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("RationalMatrix: negative dimension");
  data_.assign(static_cast<size_t>(rows) * cols, Rational(0));
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return RationalMatrix(0, 0);
  RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols_)
      throw std::invalid_argument("RationalMatrix::from_rows: ragged input");
    for (int j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

void RationalMatrix::append_row(const std::vector<Rational>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(row.size());
  if (static_cast<int>(row.size()) != cols_)
    throw std::invalid_argument("RationalMatrix::append_row: width mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<Rational> RationalMatrix::row(int i) const {
  return {data_.begin() + static_cast<long>(i) * cols_,
          data_.begin() + static_cast<long>(i + 1) * cols_};
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

namespace {

// Fraction-free (Bareiss) forward elimination on an integer copy of the
// matrix.  Returns the echelon rows (still integral) and the pivot columns.
struct Echelon {
  std::vector<std::vector<Integer>> rows;
  std::vector<int> pivot_cols;
};

Echelon bareiss_echelon(const RationalMatrix& m) {
  const int R = m.rows(), C = m.cols();
  std::vector<std::vector<Integer>> a(R, std::vector<Integer>(C));
  for (int i = 0; i < R; ++i) {
    Integer lcm = 1;
    for (int j = 0; j < C; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    for (int j = 0; j < C; ++j) a[i][j] = m.at(i, j).get_num() * (lcm / m.at(i, j).get_den());
  }

  Echelon e;
  Integer prev_pivot = 1;
  int r = 0;
  for (int col = 0; col < C && r < R; ++col) {
    int pr = -1;
    for (int i = r; i < R; ++i)
      if (a[i][col] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[r], a[pr]);
    const Integer pivot = a[r][col];
    for (int i = r + 1; i < R; ++i) {
      for (int j = col + 1; j < C; ++j) {
        Integer t = a[i][j] * pivot - a[i][col] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev_pivot = pivot;
    e.pivot_cols.push_back(col);
    ++r;
  }
  a.resize(r);
  e.rows = std::move(a);
  return e;
}

}  // namespace

int RationalMatrix::rank() const { return static_cast<int>(bareiss_echelon(*this).pivot_cols.size()); }

RationalMatrix RationalMatrix::rref(std::vector<int>* pivot_cols) const {
  Echelon e = bareiss_echelon(*this);
  const int r = static_cast<int>(e.rows.size());
  RationalMatrix out(r, cols_);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = Rational(e.rows[i][j]);
  // back substitution
  for (int i = r - 1; i >= 0; --i) {
    const int pc = e.pivot_cols[i];
    Rational inv = Rational(1) / out.at(i, pc);
    for (int j = pc; j < cols_; ++j) out.at(i, j) *= inv;
    for (int k = 0; k < i; ++k) {
      Rational f = out.at(k, pc);
      if (f == 0) continue;
      for (int j = pc; j < cols_; ++j) out.at(k, j) -= f * out.at(i, j);
    }
  }
  if (pivot_cols) *pivot_cols = e.pivot_cols;
  return out;
}

std::vector<std::vector<Rational>> RationalMatrix::kernel() const {
  std::vector<int> pivots;
  RationalMatrix R = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols_, Rational(0));
    v[f] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -R.at(static_cast<int>(i), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Rational>> RationalMatrix::left_kernel() const {
  return transpose().kernel();
}

std::optional<std::vector<Rational>> RationalMatrix::solve(const std::vector<Rational>& rhs) const {
  if (static_cast<int>(rhs.size()) != rows_)
    throw std::invalid_argument("RationalMatrix::solve: rhs size mismatch");
  RationalMatrix aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = rhs[i];
  }
  std::vector<int> pivots;
  RationalMatrix R = aug.rref(&pivots);
  for (int c : pivots)
    if (c == cols_) return std::nullopt;  // inconsistent
  std::vector<Rational> x(cols_, Rational(0));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = R.at(static_cast<int>(i), cols_);
  return x;
}

bool RationalMatrix::row_space_contains(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("row_space_contains: size mismatch");
  RationalMatrix ext = *this;
  ext.append_row(v);
  return ext.rank() == rank();
}

}  // namespace dzv
