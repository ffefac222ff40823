#include "grw/subspace.hpp"

#include <stdexcept>

namespace grw {

namespace {

// Drop all-zero rows from an echelon form.
Mat trim_zero_rows(const Mat& e)
{
  Index nonzero = 0;
  for (Index i = 0; i < e.rows(); ++i)
    for (Index j = 0; j < e.cols(); ++j)
      if (e(i, j) != Rational(0)) {
        ++nonzero;
        break;
      }
  Mat out(nonzero, e.cols());
  Index r = 0;
  for (Index i = 0; i < e.rows(); ++i) {
    bool any = false;
    for (Index j = 0; j < e.cols(); ++j)
      if (e(i, j) != Rational(0)) {
        any = true;
        break;
      }
    if (any)
      out.row(r++) = e.row(i);
  }
  return out;
}

} // namespace

Subspace::Subspace(Index ambient) : ambient_(ambient), basis_(0, ambient)
{
  if (ambient < 0)
    throw std::invalid_argument("Subspace: negative ambient dimension");
}

Subspace Subspace::from_rows(const Mat& rows)
{
  Subspace s(rows.cols());
  s.basis_ = trim_zero_rows(rref<Rational>(rows));
  return s;
}

Subspace Subspace::span(Index ambient, const std::vector<Vec>& vectors)
{
  Mat rows(static_cast<Index>(vectors.size()), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient)
      throw std::invalid_argument("Subspace::span: vector has wrong ambient dimension");
    rows.row(static_cast<Index>(i)) = vectors[i].transpose();
  }
  return from_rows(rows);
}

Subspace Subspace::full(Index ambient)
{
  Subspace s(ambient);
  s.basis_ = Mat::Identity(ambient, ambient);
  return s;
}

bool Subspace::contains(const Vec& v) const
{
  if (v.size() != ambient_)
    throw std::invalid_argument("Subspace::contains: wrong ambient dimension");
  // Reduce v against the echelon basis; membership iff the residue is zero.
  Vec w = v;
  const std::vector<Index> pivots = pivot_columns<Rational>(basis_);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const Rational c = w(pivots[r]);
    if (c != 0)
      w -= c * basis_.row(static_cast<Index>(r)).transpose();
  }
  for (Index j = 0; j < w.size(); ++j)
    if (w(j) != 0)
      return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const
{
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("Subspace::contains: ambient dimensions differ");
  for (Index i = 0; i < other.basis_.rows(); ++i)
    if (!contains(Vec(other.basis_.row(i).transpose())))
      return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const
{
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("Subspace::sum: ambient dimensions differ");
  Mat stacked(basis_.rows() + other.basis_.rows(), ambient_);
  stacked.topRows(basis_.rows()) = basis_;
  stacked.bottomRows(other.basis_.rows()) = other.basis_;
  return from_rows(stacked);
}

Subspace Subspace::intersect(const Subspace& other) const
{
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("Subspace::intersect: ambient dimensions differ");
  const Index a = basis_.rows();
  const Index b = other.basis_.rows();
  if (a == 0 || b == 0)
    return Subspace(ambient_);
  // c^T A = d^T B exactly when (c, d) lies in the kernel of [A^T | -B^T].
  Mat k(ambient_, a + b);
  k.leftCols(a) = basis_.transpose();
  k.rightCols(b) = -other.basis_.transpose();
  const Mat ker = nullspace<Rational>(k);
  Mat rows(ker.rows(), ambient_);
  for (Index i = 0; i < ker.rows(); ++i)
    rows.row(i) = ker.row(i).head(a) * basis_;
  return from_rows(rows);
}

bool operator==(const Subspace& a, const Subspace& b)
{
  if (a.ambient_ != b.ambient_ || a.basis_.rows() != b.basis_.rows())
    return false;
  for (Index i = 0; i < a.basis_.rows(); ++i)
    for (Index j = 0; j < a.basis_.cols(); ++j)
      if (a.basis_(i, j) != b.basis_(i, j))
        return false;
  return true;
}

} // namespace grw
