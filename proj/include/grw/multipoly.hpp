#ifndef GRW_MULTIPOLY_HPP
#define GRW_MULTIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "grw/rational.hpp"

namespace grw {

/**
 * Sparse multivariate polynomial over Q in a fixed number of variables,
 * stored as a map from exponent vectors to nonzero coefficients.  Used to
 * carry symbolic entries through small determinant expansions.
 */
class MultiPoly {
public:
  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly var(int nvars, int i); // variable x_i

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, MultiPoly p);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b)
  {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  Rational eval(const std::vector<Rational>& point) const;

  std::string to_string(const std::string& stem = "x") const;

private:
  int nvars_ = 0;
  std::map<std::vector<int>, Rational> terms_;
  void add_term(const std::vector<int>& e, const Rational& c);
};

/// Hard cap on symbolic determinant size; expansion is factorial in the
/// dimension, so larger requests are a contract violation.
inline constexpr int kSymDetCap = 6;

/**
 * Exact symbolic determinant by signed permutation expansion with
 * structural-zero pruning: branches through zero entries are skipped before
 * any multiplication happens.  Throws when the matrix is not square or
 * exceeds the cap.
 */
MultiPoly sym_det(const std::vector<std::vector<MultiPoly>>& m);

} // namespace grw

#endif
