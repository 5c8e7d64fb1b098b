#pragma once
// Dense exact matrices over the scalar field, with order-sensitive minor
// extraction and exact linear solving.
//
// Element access and all index sets are 1-based, matching the formulas this
// library implements; storage is dense row-major. submatrix/minor extract
// rows and columns in the order listed by their IndexSet arguments — the
// sign of a minor depends on those orders and is never silently sorted.
//
// Determinants over Rational run fraction-free (Bareiss) on a
// denominator-cleared integer copy; over other fields (Q(e)) ordinary
// Gaussian elimination with exact division is used. The 0x0 minor is 1.

#include <type_traits>
#include <utility>
#include <vector>

#include "clipvol/errors.hpp"
#include "clipvol/index_set.hpp"
#include "clipvol/rational.hpp"

namespace clipvol {

template <class S>
class Matrix {
 public:
  Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw ShapeMismatch("negative matrix dimension");
    entries_.assign(
        static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), S(0));
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 1; i <= n; ++i) m(i, i) = S(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  S& operator()(int i, int j) {
    check(i, j);
    return entries_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)];
  }
  const S& operator()(int i, int j) const {
    check(i, j);
    return entries_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)];
  }

  // Rows in the order of I, columns in the order of J (order-sensitive).
  Matrix submatrix(const IndexSet& i_rows, const IndexSet& j_cols) const {
    Matrix sub(i_rows.size(), j_cols.size());
    for (int a = 1; a <= i_rows.size(); ++a) {
      const int r = i_rows[a - 1];
      if (r < 1 || r > rows_)
        throw IndexOutOfRange("row index " + std::to_string(r) +
                              " outside 1.." + std::to_string(rows_));
      for (int b = 1; b <= j_cols.size(); ++b) {
        const int c = j_cols[b - 1];
        if (c < 1 || c > cols_)
          throw IndexOutOfRange("column index " + std::to_string(c) +
                                " outside 1.." + std::to_string(cols_));
        sub(a, b) = (*this)(r, c);
      }
    }
    return sub;
  }

  S det() const {
    if (rows_ != cols_)
      throw ShapeMismatch("determinant of a non-square matrix");
    if (rows_ == 0) return S(1);
    if constexpr (std::is_same_v<S, Rational>) {
      return det_bareiss();
    } else {
      return det_elimination();
    }
  }

 private:
  void check(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
      throw IndexOutOfRange("entry (" + std::to_string(i) + "," +
                            std::to_string(j) + ") outside " +
                            std::to_string(rows_) + "x" + std::to_string(cols_));
  }

  // Fraction-free determinant over cleared-denominator integers.
  S det_bareiss() const {
    const int n = rows_;
    std::vector<BigInt> m(static_cast<std::size_t>(n) * n);
    BigInt row_scale_product = 1;
    for (int i = 0; i < n; ++i) {
      BigInt l = 1;
      for (int j = 0; j < n; ++j) {
        const Rational& x = entries_[static_cast<std::size_t>(i) * n + j];
        l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
      }
      row_scale_product *= l;
      for (int j = 0; j < n; ++j) {
        const Rational scaled =
            entries_[static_cast<std::size_t>(i) * n + j] * Rational(l);
        m[static_cast<std::size_t>(i) * n + j] =
            boost::multiprecision::numerator(scaled);
      }
    }
    int sign_flips = 1;
    BigInt prev = 1;
    for (int k = 0; k < n - 1; ++k) {
      if (m[static_cast<std::size_t>(k) * n + k] == 0) {
        int swap_row = -1;
        for (int i = k + 1; i < n; ++i)
          if (m[static_cast<std::size_t>(i) * n + k] != 0) {
            swap_row = i;
            break;
          }
        if (swap_row < 0) return S(0);
        for (int j = 0; j < n; ++j)
          std::swap(m[static_cast<std::size_t>(k) * n + j],
                    m[static_cast<std::size_t>(swap_row) * n + j]);
        sign_flips = -sign_flips;
      }
      const BigInt pivot = m[static_cast<std::size_t>(k) * n + k];
      for (int i = k + 1; i < n; ++i) {
        for (int j = k + 1; j < n; ++j) {
          BigInt& x = m[static_cast<std::size_t>(i) * n + j];
          x = (x * pivot - m[static_cast<std::size_t>(i) * n + k] *
                               m[static_cast<std::size_t>(k) * n + j]) /
              prev;  // exact by Bareiss
        }
        m[static_cast<std::size_t>(i) * n + k] = 0;
      }
      prev = pivot;
    }
    const BigInt int_det = m[static_cast<std::size_t>(n - 1) * n + (n - 1)];
    return Rational(int_det * sign_flips, row_scale_product);
  }

  // Ordinary exact elimination for a general field: pick the first nonzero
  // pivot in each column (no magnitude comparison exists), track row-swap
  // signs, multiply the pivots.
  S det_elimination() const {
    const int n = rows_;
    std::vector<S> m(entries_);
    int sign_flips = 1;
    S result(1);
    for (int k = 0; k < n; ++k) {
      int pivot_row = -1;
      for (int i = k; i < n; ++i)
        if (!(m[static_cast<std::size_t>(i) * n + k] == S(0))) {
          pivot_row = i;
          break;
        }
      if (pivot_row < 0) return S(0);
      if (pivot_row != k) {
        for (int j = 0; j < n; ++j)
          std::swap(m[static_cast<std::size_t>(k) * n + j],
                    m[static_cast<std::size_t>(pivot_row) * n + j]);
        sign_flips = -sign_flips;
      }
      const S pivot = m[static_cast<std::size_t>(k) * n + k];
      result *= pivot;
      for (int i = k + 1; i < n; ++i) {
        const S factor = m[static_cast<std::size_t>(i) * n + k] / pivot;
        if (factor == S(0)) continue;
        for (int j = k; j < n; ++j)
          m[static_cast<std::size_t>(i) * n + j] -=
              factor * m[static_cast<std::size_t>(k) * n + j];
      }
    }
    if (sign_flips < 0) result = -result;
    return result;
  }

  int rows_;
  int cols_;
  std::vector<S> entries_;
};

// Determinant of the order-sensitive submatrix A_I^J; |I| must equal |J|
// (ShapeMismatch otherwise). The empty minor A_{}^{} is 1.
template <class S>
S minor(const Matrix<S>& a, const IndexSet& i_rows, const IndexSet& j_cols) {
  if (i_rows.size() != j_cols.size())
    throw ShapeMismatch("minor with |I| = " + std::to_string(i_rows.size()) +
                        " != |J| = " + std::to_string(j_cols.size()));
  return a.submatrix(i_rows, j_cols).det();
}

enum class SolveStatus { kUnique, kInconsistent, kUnderdetermined };

template <class S>
struct LinearSolveResult {
  SolveStatus status;
  std::vector<S> solution;  // filled only for kUnique
};

// Row-reduce the general (possibly rectangular) system M x = b exactly and
// classify it. Unknowns = columns of M.
template <class S>
LinearSolveResult<S> gaussian_solve(Matrix<S> m, std::vector<S> b) {
  const int rows = m.rows(), cols = m.cols();
  if (static_cast<int>(b.size()) != rows)
    throw ShapeMismatch("right-hand side length != row count");
  std::vector<int> pivot_col_of_row;
  int rank_row = 1;
  for (int col = 1; col <= cols && rank_row <= rows; ++col) {
    int pivot_row = -1;
    for (int i = rank_row; i <= rows; ++i)
      if (!(m(i, col) == S(0))) {
        pivot_row = i;
        break;
      }
    if (pivot_row < 0) continue;
    if (pivot_row != rank_row) {
      for (int j = col; j <= cols; ++j) std::swap(m(rank_row, j), m(pivot_row, j));
      std::swap(b[rank_row - 1], b[pivot_row - 1]);
    }
    const S pivot = m(rank_row, col);
    for (int i = rank_row + 1; i <= rows; ++i) {
      const S factor = m(i, col) / pivot;
      if (factor == S(0)) continue;
      for (int j = col; j <= cols; ++j) m(i, j) -= factor * m(rank_row, j);
      b[i - 1] -= factor * b[rank_row - 1];
    }
    pivot_col_of_row.push_back(col);
    ++rank_row;
  }
  const int rank = static_cast<int>(pivot_col_of_row.size());
  for (int i = rank + 1; i <= rows; ++i)
    if (!(b[i - 1] == S(0)))
      return {SolveStatus::kInconsistent, {}};
  if (rank < cols) return {SolveStatus::kUnderdetermined, {}};
  std::vector<S> x(static_cast<std::size_t>(cols), S(0));
  for (int i = rank; i >= 1; --i) {
    const int col = pivot_col_of_row[i - 1];
    S acc = b[i - 1];
    for (int j = col + 1; j <= cols; ++j) acc -= m(i, j) * x[j - 1];
    x[col - 1] = acc / m(i, col);
  }
  return {SolveStatus::kUnique, std::move(x)};
}

// Unique solution of a square nonsingular system (SingularSystem otherwise).
template <class S>
std::vector<S> solve_square(const Matrix<S>& m, const std::vector<S>& b) {
  if (m.rows() != m.cols())
    throw ShapeMismatch("solve_square on a non-square matrix");
  LinearSolveResult<S> r = gaussian_solve(m, b);
  if (r.status != SolveStatus::kUnique)
    throw SingularSystem("singular square system (det = 0)");
  return std::move(r.solution);
}

}  // namespace clipvol
