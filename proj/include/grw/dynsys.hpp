#ifndef GRW_DYNSYS_HPP
#define GRW_DYNSYS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grw/coeff.hpp"
#include "grw/linalg.hpp"
#include "grw/poly.hpp"

namespace grw {

/**
 * A finite dynamical system: a permutation h of a finite labeled point set.
 * The induced automorphism of Q^X is f -> f o h; iterating gives an action of
 * the integers, and the crossed product Q^X x Z collects formal sums
 * sum f_n u_n with (f u_n)(g u_m) = f * (g o h^n) u_{n+m}.
 */
struct FiniteDynSystem {
  FunctionRing space;
  Permutation h;
};

/// Presentation defects (empty means well-formed: h permutes the points).
std::vector<std::string> validate_dynsys(const FiniteDynSystem& sys);

/// Points fixed by h^n (all points for n = 0), ascending.
std::vector<int> per_n(const FiniteDynSystem& sys, long n);
/// Points periodic under some nonzero power, ascending.  On a finite set this
/// is every point: h has finite order.
std::vector<int> periodic_points(const FiniteDynSystem& sys);
std::vector<int> aperiodic_points(const FiniteDynSystem& sys);
/// Least n > 0 with h^n = id (the lcm of the cycle lengths).
long order_of_map(const FiniteDynSystem& sys);
/// Minimality = a single orbit (every orbit is dense iff there is only one).
bool is_minimal(const FiniteDynSystem& sys);
/// Q^X has no proper nonzero ideal invariant under f -> f o h iff the action
/// is transitive; delegates to the coefficient-ring machinery.
GSimpleVerdict z_simple_coefficients(const FiniteDynSystem& sys);

/// Finitely supported map degree -> coefficient function; zero components
/// are never stored.
using CrossedElement = std::map<long, Vec>;

CrossedElement crossed_monomial(const FiniteDynSystem& sys, long n, Vec f);
CrossedElement crossed_add(const CrossedElement& a, const CrossedElement& b);
CrossedElement crossed_sub(const CrossedElement& a, const CrossedElement& b);
CrossedElement crossed_mul(const FiniteDynSystem& sys, const CrossedElement& a,
                           const CrossedElement& b);

/**
 * Membership in the commutant of the function ring: an element commutes with
 * every degree-zero function iff each coefficient f_n is supported on the
 * n-periodic points.  Violations list the offending points per degree.
 */
struct CommutantMembershipReport {
  bool member = true;
  std::map<long, std::vector<int>> violations;
};

CommutantMembershipReport commutant_membership(const FiniteDynSystem& sys,
                                               const CrossedElement& a);

/**
 * The standing verdicts for a finite system.  Everything here is exact; the
 * negative answers come with explicit witnesses.
 *  - minimal iff the coefficients are Z-simple (both reduce to transitivity);
 *  - never topologically free: h^ord fixes every point;
 *  - Q^X is never maximal commutative in the crossed product: an indicator
 *    function on a shortest cycle commutes at a nonzero degree;
 *  - the crossed product is never simple.  A non-minimal system keeps the
 *    functions supported on one orbit as a proper ideal; a minimal one sends
 *    u_ord - 1 into the kernel of evaluation at t = 1 under the faithful
 *    matrix picture (see verify_pi), which no unit can enter.
 */
struct DynSysVerdicts {
  bool minimal = false;
  GSimpleVerdict z_simple;
  bool minimal_matches_z_simple = false;
  bool top_free = false;
  std::string top_free_reason;
  bool max_commutative = false;
  std::optional<CrossedElement> commutant_witness; // nonzero degree, commutes with Q^X
  bool simple = false;
  std::string simple_reason;
};

DynSysVerdicts dynsys_verdicts(const FiniteDynSystem& sys);

/// Dense matrix over the Laurent polynomials Q[t, t^-1], sized at runtime.
class LaurentMatrix {
public:
  LaurentMatrix(Index rows, Index cols);
  static LaurentMatrix identity(Index n);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  LaurentPoly& at(Index i, Index j);
  const LaurentPoly& at(Index i, Index j) const;

  LaurentMatrix pow(int k) const; // square matrices, k >= 0

  /// Entrywise evaluation (x != 0 when negative exponents occur).
  Mat eval(const Rational& x) const;

  bool is_zero() const;

  friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator*(const LaurentPoly& s, LaurentMatrix m);
  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator!=(const LaurentMatrix& a, const LaurentMatrix& b)
  {
    return !(a == b);
  }

private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<LaurentPoly> entries_; // row-major
};

/**
 * The matrix picture of a single-orbit crossed product: order the orbit as
 * x_i = h^i(x_0) starting from point 0; functions map to diagonal matrices
 * diag(f(x_0), ..., f(x_{p-1})) and u_1 to the cyclic down-shift U with
 * U(i, i+1) = 1 and U(p-1, 0) = t, so that U^p = t * I and
 * U diag(f) U^-1 = diag(f o h).  pi(f u_n) = diag(f) U^n.
 */
LaurentMatrix pi_shift_matrix(const FiniteDynSystem& sys, long n); // pi(u_n)
LaurentMatrix pi_of(const FiniteDynSystem& sys, const CrossedElement& a);

/**
 * Bounded verification that pi identifies the crossed product with the full
 * p x p Laurent matrix algebra:
 *  - pi(ab) = pi(a) pi(b) on random pairs (exact, no truncation);
 *  - pi(u_1)^p = t * I;
 *  - pi is injective on the degree window |n| <= p(D+1): the image
 *    coordinates over exponents |e| <= D+1 have full rank p(2p(D+1)+1);
 *  - pi is surjective onto the exponent window |e| <= D: every coordinate
 *    matrix unit E_ij t^e is hit by that same domain window;
 *  - the evaluation t = 1 certificate: pi(u_p - 1) = (t-1)I is nonzero but
 *    evaluates to zero, while pi(1) evaluates to the identity, so the ideal
 *    generated by u_p - 1 is proper and nonzero.
 * Requires a single orbit (throws otherwise).
 */
struct PiReport {
  int p = 0;
  int degree_window = 0; // D
  int samples = 0;
  std::uint64_t seed = 0;
  bool homomorphism_on_samples = false;
  bool shift_power_is_t = false;
  Index domain_dim = 0;
  Index image_rank = 0;
  bool injective_on_window = false;
  Index window_dim = 0; // dim of the target window W_D
  bool window_surjective = false;
  bool unit_ideal_escape = false;
  std::vector<std::string> failures;

  bool all() const
  {
    return homomorphism_on_samples && shift_power_is_t && injective_on_window &&
           window_surjective && unit_ideal_escape;
  }
};

PiReport verify_pi(const FiniteDynSystem& sys, int degree_window, int samples,
                   std::uint64_t seed);

} // namespace grw

#endif
