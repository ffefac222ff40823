#ifndef GRW_POLY_HPP
#define GRW_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "grw/rational.hpp"

namespace grw {

/**
 * Univariate polynomial over Q, coefficients ascending by exponent.
 * Normal form: the coefficient vector is empty for the zero polynomial and
 * otherwise has a nonzero last entry, so equality is plain vector equality.
 */
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly zero() { return Poly(); }
  static Poly one() { return constant(Rational(1)); }
  static Poly constant(const Rational& c);
  static Poly var(); // the generator z
  static Poly monomial(const Rational& c, int exponent);

  bool is_zero() const { return c_.empty(); }
  /// Degree, with deg 0 = -1 by convention.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(int exponent) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational leading() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, Poly p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Rational eval(const Rational& x) const;

  /// Exact division with remainder over the field: f = q*g + r, deg r < deg g.
  static std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
  /// Does f divide g exactly?
  static bool divides(const Poly& f, const Poly& g);

  std::string to_string(const std::string& variable = "z") const;

private:
  std::vector<Rational> c_;
  void normalize();
};

/// f(z) -> f(z + c), expanded by repeated multiplication with (z + c); the
/// coefficients that appear are exactly the binomial-expansion ones.
Poly poly_shift(const Poly& f, const Rational& c);

/**
 * Laurent polynomial over Q: a plain coefficient vector plus the exponent of
 * its first entry.  Normal form: zero is the empty vector with offset 0;
 * otherwise both the first and last coefficients are nonzero.
 */
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(int low, std::vector<Rational> coeffs);

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return monomial(Rational(1), 0); }
  static LaurentPoly monomial(const Rational& c, int exponent);
  static LaurentPoly from_poly(const Poly& p);

  bool is_zero() const { return c_.empty(); }
  int low() const { return low_; }                                  // lowest exponent
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; } // highest exponent
  Rational coeff(int exponent) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const Rational& s, LaurentPoly p);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b)
  {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  Rational eval(const Rational& x) const; // requires x != 0 when low() < 0

  std::string to_string(const std::string& variable = "t") const;

private:
  int low_ = 0;
  std::vector<Rational> c_;
  void normalize();
};

} // namespace grw

#endif
