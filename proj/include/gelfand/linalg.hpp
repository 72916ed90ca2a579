#ifndef GELFAND_LINALG_HPP
#define GELFAND_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "gelfand/errors.hpp"
#include "gelfand/rational.hpp"

namespace gelfand {

/// Dense matrix over an exact field, row-major.
template <class F>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  F& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const F& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Mat r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (aik == F(0)) continue;
        for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  int rows_, cols_;
  std::vector<F> a_;
};

using MatQ = Mat<Rat>;

/// Gauss-Jordan rank over an exact field.
template <class F>
int rank(Mat<F> m) {
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!(m(i, c) == F(0))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    F inv = F(1) / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == F(0)) continue;
      F f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    ++r;
  }
  return r;
}

/// Solves A X = B exactly for one solution (free variables set to zero).
/// Returns nullopt if the system is inconsistent for some column of B.
template <class F>
std::optional<Mat<F>> solve_exact(Mat<F> A, Mat<F> B) {
  if (A.rows() != B.rows()) throw DimensionError("solve: row count mismatch");
  const int n = A.rows(), m = A.cols(), k = B.cols();
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < m && r < n; ++c) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (!(A(i, c) == F(0))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < m; ++j) std::swap(A(piv, j), A(r, j));
      for (int j = 0; j < k; ++j) std::swap(B(piv, j), B(r, j));
    }
    F inv = F(1) / A(r, c);
    for (int j = c; j < m; ++j) A(r, j) = A(r, j) * inv;
    for (int j = 0; j < k; ++j) B(r, j) = B(r, j) * inv;
    for (int i = 0; i < n; ++i) {
      if (i == r || A(i, c) == F(0)) continue;
      F f = A(i, c);
      for (int j = c; j < m; ++j) A(i, j) = A(i, j) - f * A(r, j);
      for (int j = 0; j < k; ++j) B(i, j) = B(i, j) - f * B(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  // Zero rows of A must have zero right-hand sides.
  for (int i = r; i < n; ++i)
    for (int j = 0; j < k; ++j)
      if (!(B(i, j) == F(0))) return std::nullopt;
  Mat<F> X(m, k);
  for (int p = 0; p < r; ++p)
    for (int j = 0; j < k; ++j) X(pivot_col[p], j) = B(p, j);
  return X;
}

/// Minimum-Euclidean-norm exact solution of E X = B (multi-column), via the
/// Gram system E E^T Y = B, X = E^T Y.  The result lies in the row space of E,
/// which pins the minimal-norm representative uniquely; inconsistent columns
/// are reported by index.
template <class F>
std::optional<Mat<F>> min_norm_solve(const Mat<F>& E, const Mat<F>& B,
                                     int* bad_column = nullptr) {
  if (E.rows() != B.rows()) throw DimensionError("min_norm_solve: row count mismatch");
  Mat<F> Et = E.transposed();
  Mat<F> G = E * Et;
  auto Y = solve_exact(G, B);
  if (!Y) {
    if (bad_column) {
      // Locate the first offending column for diagnostics.
      for (int j = 0; j < B.cols(); ++j) {
        Mat<F> col(B.rows(), 1);
        for (int i = 0; i < B.rows(); ++i) col(i, 0) = B(i, j);
        if (!solve_exact(G, col)) {
          *bad_column = j;
          break;
        }
      }
    }
    return std::nullopt;
  }
  Mat<F> X = Et * *Y;
  // col(G) = col(E), so solvability of the Gram system already implies
  // consistency; verify the reconstruction anyway.
  Mat<F> R = E * X;
  for (int j = 0; j < B.cols(); ++j)
    for (int i = 0; i < B.rows(); ++i)
      if (!(R(i, j) == B(i, j))) {
        if (bad_column) *bad_column = j;
        return std::nullopt;
      }
  return X;
}

}  // namespace gelfand

#endif
