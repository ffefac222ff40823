#ifndef GRW_SUBSPACE_HPP
#define GRW_SUBSPACE_HPP

#include <vector>

#include "grw/linalg.hpp"

namespace grw {

/**
 * A linear subspace of Q^n held in canonical form: the basis matrix is the
 * reduced row echelon form of whatever spanning set produced it, with zero
 * rows dropped.  Two Subspace values are equal as sets of vectors iff their
 * basis matrices are identical, so operator== is structural.
 */
class Subspace {
public:
  /// Zero subspace of Q^ambient.
  explicit Subspace(Index ambient);

  static Subspace span(Index ambient, const std::vector<Vec>& vectors);
  static Subspace from_rows(const Mat& rows); // ambient = rows.cols()
  static Subspace full(Index ambient);

  Index ambient() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  bool is_zero() const { return basis_.rows() == 0; }

  /// Canonical basis, one vector per row, in reduced row echelon form.
  const Mat& basis() const { return basis_; }
  Vec basis_vector(Index i) const { return basis_.row(i).transpose(); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  Index ambient_;
  Mat basis_;
};

} // namespace grw

#endif
