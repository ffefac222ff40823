#ifndef GRW_CRYSTALLINE_HPP
#define GRW_CRYSTALLINE_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grw/coeff.hpp"
#include "grw/linalg.hpp"
#include "grw/poly.hpp"

namespace grw {

/*
 * The first Weyl algebra A = Q<x, y> / (yx - xy + 1), handled through its
 * normal form: every element is a unique Q-combination of monomials x^a y^b.
 * A is Z-graded with deg x = 1, deg y = -1; the degree-n component is
 * A_0 u_n for the neutral component A_0 = Q[z] (z = xy) and
 * u_n = x^n (n >= 0), u_n = y^{-n} (n < 0).  Products satisfy
 * u_m u_n = alpha(m, n)(z) u_{m+n} with *nonzero* (not necessarily
 * invertible) structure polynomials alpha: a crystalline gradation — one
 * regular homogeneous basis element per degree — rather than a crossed
 * product.
 */

/// Normal-form element: monomial (a, b) = x^a y^b mapped to its coefficient;
/// zero coefficients never stored.
using WeylMonomial = std::pair<int, int>;
using WeylElement = std::map<WeylMonomial, Rational>;

WeylElement weyl_monomial(int a, int b, const Rational& c = Rational(1));
WeylElement weyl_add(const WeylElement& p, const WeylElement& q);
WeylElement weyl_sub(const WeylElement& p, const WeylElement& q);
WeylElement weyl_scale(const Rational& c, const WeylElement& p);

/// Product in normal form via the rewrite y x^a = x^a y - a x^{a-1},
/// applied recursively.
WeylElement weyl_mul(const WeylElement& p, const WeylElement& q);

/**
 * Independent model: A acts faithfully on Q[t] with x acting as
 * multiplication by t and y as -d/dt (the signs match yx = xy - 1).  Every
 * identity of normal forms can be cross-checked by comparing actions on
 * 1, t, t^2, ...; two elements whose y-degrees are at most B agree iff their
 * actions on t^0..t^B agree.
 */
Poly weyl_apply(const WeylElement& w, const Poly& p);

std::string weyl_to_string(const WeylElement& w);

/// The distinguished degree-n basis element u_n.
WeylElement weyl_u(int n);
/// Normal form of z^k for z = xy.
WeylElement weyl_z_power(int k);
/// Normal form of f(z).
WeylElement weyl_from_poly_in_z(const Poly& f);

/**
 * Writes w as f(z) u_n if possible, i.e. when w is homogeneous of degree n
 * (every monomial x^a y^b satisfies a - b = n).  Returns the unique f, or
 * nullopt when w does not lie in A_0 u_n.
 */
std::optional<Poly> weyl_in_component(const WeylElement& w, int n);

/// The structure polynomial alpha(m, n) defined by u_m u_n = alpha(m,n)(z) u_{m+n};
/// computed by normal-form multiplication and exact extraction.
Poly weyl_alpha(int m, int n);

/// The degree-n coefficient automorphism: u_n f(z) = sigma_n(f)(z) u_n, which
/// is the shift f(z) -> f(z + n).
Poly weyl_sigma(int n, const Poly& f);

/**
 * Bounded verification that (alpha, sigma) really presents a crystalline
 * gradation: products match, intertwining holds, the 2-cocycle identity
 * alpha(s,t) alpha(s+t,w) = sigma_s(alpha(t,w)) alpha(s,t+w) holds on all
 * triples with |s|,|t|,|w| <= bound, values are nonzero and normalized, and
 * alpha(n,-n) = sigma_n(alpha(-n,n)).  The alpha argument is injectable so a
 * corrupted table is caught by the same checker.
 */
struct CrystallineCheckReport {
  int bound = 0;
  bool product_match = true;    // nf(u_m) nf(u_n) = nf(alpha(m,n)) nf(u_{m+n})
  bool intertwining = true;     // nf(u_n) nf(f) = nf(sigma_n f) nf(u_n)
  bool cocycle_identity = true;
  bool normalization = true;    // alpha(0, n) = alpha(n, 0) = 1
  bool values_nonzero = true;
  bool inverse_symmetry = true; // alpha(n, -n) = sigma_n(alpha(-n, n))
  std::vector<std::string> failures;

  bool all() const
  {
    return product_match && intertwining && cocycle_identity && normalization &&
           values_nonzero && inverse_symmetry;
  }
};

CrystallineCheckReport check_crystalline_axioms(const std::function<Poly(int, int)>& alpha,
                                                int bound);

/**
 * Finite-window commutant evidence for the maximal commutativity of Q[z]:
 * within span{x^a y^b : a + b <= bound}, the solutions of wz = zw (an exact
 * linear condition; products are computed without truncation) are precisely
 * the polynomials in z that fit in the window.
 */
struct WeylCommutantReport {
  int bound = 0;
  Index window_dim = 0;
  Index commutant_dim = 0;
  Index expected_dim = 0; // #{k : z^k fits in the window} = floor(bound/2) + 1
  bool equals_z_polynomials = false;
};

WeylCommutantReport weyl_bounded_commutant_of_z(int bound);

/**
 * The graded consequence of simplicity for a crystalline gradation: a simple
 * ring forces its neutral component to be G-simple.  The simplicity of the
 * Weyl algebra in characteristic zero is classical and enters as an explicit
 * attestation rather than a computation; the computable halves are that Q[z]
 * is G-simple for the shift action (exact) while not simple by itself (the
 * principal ideal (z) is proper, nonzero, and invariant under the trivial
 * shift only).
 */
struct WeylGSimplicityReport {
  bool simplicity_attested = false;
  GSimpleVerdict coefficients_g_simple;
  bool neutral_witness_proper = false;  // (z) != 0, (z) != Q[z]
  bool neutral_witness_escapes = false; // some shift moves (z): not G-invariant
  std::string conclusion;
};

WeylGSimplicityReport weyl_g_simplicity_report(int bound, bool attest_simplicity);

} // namespace grw

#endif
