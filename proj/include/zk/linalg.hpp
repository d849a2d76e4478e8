#pragma once

// Exact elimination kernels. Everything here is templated on the scalar so
// the same routines run over Integer (fraction-free) and Rational (field).

#include <Eigen/Core>

#include <utility>
#include <vector>

#include "zk/scalar.hpp"

namespace zk::linalg {

/// Rank by Bareiss fraction-free elimination. Every intermediate entry is a
/// minor of the input, so the division in the update step is exact.
template <typename Scalar>
Eigen::Index rank_fraction_free(Matrix<Scalar> m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Scalar prev(1);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar pivot = m(r, c);
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      const Scalar lead = m(i, c);
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        m(i, j) = (pivot * m(i, j) - lead * m(r, j)) / prev;
      }
      m(i, c) = 0;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

/// Rank of a {-1,0,1} matrix, computed fraction-free over Integer.
inline Eigen::Index rank(const SignMatrix& m) {
  if (m.size() == 0) return 0;
  return rank_fraction_free<Integer>(m.cast<Integer>());
}

/// In-place reduced row echelon form over a field. Returns pivot columns.
template <typename Scalar>
std::vector<Eigen::Index> rref(Matrix<Scalar>& m, Eigen::Index pivot_cols = -1) {
  if (pivot_cols < 0) pivot_cols = m.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < pivot_cols && r < m.rows(); ++c) {
    Eigen::Index p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Eigen::Index j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Scalar f = m(i, c);
      for (Eigen::Index j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Columns form a basis of the null space of `a`.
template <typename Scalar>
Matrix<Scalar> kernel_basis(const Matrix<Scalar>& a) {
  Matrix<Scalar> m = a;
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix<Scalar> basis = Matrix<Scalar>::Zero(a.cols(), a.cols() - Eigen::Index(pivots.size()));
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -m(Eigen::Index(r), free);
    ++k;
  }
  return basis;
}

/// Indices of a maximal linearly independent subset of the columns, chosen
/// greedily left to right.
template <typename Scalar>
std::vector<Eigen::Index> independent_columns(const Matrix<Scalar>& a) {
  Matrix<Scalar> m = a;
  return rref(m);
}

/// A left inverse of a full-column-rank matrix: returns L with L * a = I.
template <typename Scalar>
Matrix<Scalar> left_inverse(const Matrix<Scalar>& a) {
  const Eigen::Index n = a.rows(), r = a.cols();
  Matrix<Scalar> aug(n, r + n);
  aug.leftCols(r) = a;
  aug.rightCols(n) = Matrix<Scalar>::Identity(n, n);
  const auto pivots = rref(aug, r);
  if (Eigen::Index(pivots.size()) != r) return Matrix<Scalar>(0, n);
  return aug.topRightCorner(r, n);
}

}  // namespace zk::linalg
