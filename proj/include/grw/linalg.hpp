#ifndef GRW_LINALG_HPP
#define GRW_LINALG_HPP

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <vector>

#include "grw/rational.hpp"

namespace grw {

template <typename T>
using MatrixT = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using VectorT = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using Mat = MatrixT<Rational>;
using Vec = VectorT<Rational>;
using Index = Eigen::Index;

/**
 * Reduced row echelon form by exact Gauss-Jordan elimination.
 * Pivots are the first nonzero entry of each column, scanned left to right;
 * pivot rows are normalized to 1 and every other entry of a pivot column is
 * cleared.  Works over any exact field scalar.
 */
template <typename T>
MatrixT<T> rref(MatrixT<T> m)
{
  Index pivot_row = 0;
  for (Index col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    Index i = pivot_row;
    while (i < m.rows() && m(i, col) == T(0))
      ++i;
    if (i == m.rows())
      continue;
    if (i != pivot_row)
      m.row(i).swap(m.row(pivot_row));
    m.row(pivot_row) /= m(pivot_row, col);
    for (Index k = 0; k < m.rows(); ++k) {
      if (k != pivot_row && m(k, col) != T(0))
        m.row(k) -= m(k, col) * m.row(pivot_row);
    }
    ++pivot_row;
  }
  return m;
}

/// Rank over the scalar field, read off the echelon form.
template <typename T>
Index rank(const MatrixT<T>& m)
{
  const MatrixT<T> e = rref(m);
  Index r = 0;
  for (Index i = 0; i < e.rows(); ++i) {
    bool nonzero = false;
    for (Index j = 0; j < e.cols(); ++j)
      if (e(i, j) != T(0)) {
        nonzero = true;
        break;
      }
    if (nonzero)
      ++r;
  }
  return r;
}

/// Columns of the echelon form that carry a pivot, in order.
template <typename T>
std::vector<Index> pivot_columns(const MatrixT<T>& echelon)
{
  std::vector<Index> pivots;
  Index col = 0;
  for (Index row = 0; row < echelon.rows(); ++row) {
    while (col < echelon.cols() && echelon(row, col) == T(0))
      ++col;
    if (col == echelon.cols())
      break;
    pivots.push_back(col);
    ++col;
  }
  return pivots;
}

/**
 * One exact solution of a x = b, free variables set to zero.
 * Returns nothing when the system is inconsistent; a row-count mismatch
 * between a and b is a contract violation and throws.
 */
template <typename T>
std::optional<VectorT<T>> solve(const MatrixT<T>& a, const VectorT<T>& b)
{
  if (a.rows() != b.rows())
    throw std::invalid_argument("solve: dimension mismatch between matrix and right-hand side");
  MatrixT<T> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const MatrixT<T> e = rref(aug);
  const std::vector<Index> pivots = pivot_columns(e);
  if (!pivots.empty() && pivots.back() == a.cols())
    return std::nullopt; // a pivot in the augmented column: inconsistent
  VectorT<T> x = VectorT<T>::Zero(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x(pivots[r]) = e(static_cast<Index>(r), a.cols());
  return x;
}

/**
 * Basis of the kernel of a, one row per basis vector, built from the free
 * columns of the echelon form (the standard back-substitution construction).
 */
template <typename T>
MatrixT<T> nullspace(const MatrixT<T>& a)
{
  const MatrixT<T> e = rref(a);
  const std::vector<Index> pivots = pivot_columns(e);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (Index p : pivots)
    is_pivot[static_cast<std::size_t>(p)] = true;
  const Index k = a.cols() - static_cast<Index>(pivots.size());
  MatrixT<T> basis = MatrixT<T>::Zero(k, a.cols());
  Index row = 0;
  for (Index free_col = 0; free_col < a.cols(); ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)])
      continue;
    basis(row, free_col) = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(row, pivots[r]) = -e(static_cast<Index>(r), free_col);
    ++row;
  }
  return basis;
}

/// Exact determinant by fraction-free-ish Gaussian elimination over the field.
template <typename T>
T det(MatrixT<T> m)
{
  if (m.rows() != m.cols())
    throw std::invalid_argument("det: matrix not square");
  T result(1);
  for (Index col = 0; col < m.cols(); ++col) {
    Index i = col;
    while (i < m.rows() && m(i, col) == T(0))
      ++i;
    if (i == m.rows())
      return T(0);
    if (i != col) {
      m.row(i).swap(m.row(col));
      result = -result;
    }
    result *= m(col, col);
    for (Index k = col + 1; k < m.rows(); ++k) {
      if (m(k, col) != T(0)) {
        const T factor = m(k, col) / m(col, col);
        m.row(k) -= factor * m.row(col);
      }
    }
  }
  return result;
}

} // namespace grw

#endif
