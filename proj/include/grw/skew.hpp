#ifndef GRW_SKEW_HPP
#define GRW_SKEW_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grw/coeff.hpp"
#include "grw/graded.hpp"

namespace grw {

/**
 * Presentation of a skew (or twisted) group ring over the function ring Q^X:
 * one copy of the coefficients per group element, with
 *
 *   (f u_g)(f' u_h) = f * sigma_g(f') * alpha(g, h) u_{gh},
 *
 * where sigma_g(f) = f o p_g for the stored permutation p_g, and alpha is an
 * optional 2-cocycle with invertible (nowhere zero) values; absent alpha
 * means the trivial cocycle, i.e. an honest skew group ring.
 *
 * The stored family must satisfy p_{gh} = p_g-then-p_h so that g -> sigma_g
 * is a group homomorphism (checked by validate_spec).
 */
struct SkewGroupRingSpec {
  FunctionRing coefficients;
  FiniteGroup group;
  std::vector<Permutation> action;              // indexed by group element
  std::optional<std::vector<std::vector<Vec>>> cocycle; // alpha[g][h] in Q^X

  bool has_trivial_cocycle() const;
};

/// Every spec-level inconsistency found (empty means well-formed).
std::vector<std::string> validate_spec(const SkewGroupRingSpec& spec);

/// Materialize the graded presentation.  Throws on an invalid spec.
GradedRing build(const SkewGroupRingSpec& spec);

/**
 * Augmentation epsilon(sum f_g u_g) = sum f_g, a coefficient-ring element.
 * Defined for trivial cocycles only (throws otherwise); it is a ring
 * homomorphism exactly when the action is trivial, and always linear.
 */
Vec augmentation(const SkewGroupRingSpec& spec, const Vec& flat);

/// A degree s != e together with 0 != r_s in Q^X satisfying
/// r_s * sigma_s(a) = r_s * a for every coefficient a.
struct CommutationWitness {
  int s = 0;
  Vec r_s;
};

/**
 * Scans s != e in index order and solves the linear system
 * r * (sigma_s(delta_j) - delta_j) = 0 over the indicator basis.  The first
 * degree with a nonzero solution yields the witness (first canonical basis
 * vector of the solution space); no witness means R_e is maximal commutative.
 */
std::optional<CommutationWitness> find_commutation_witness(const SkewGroupRingSpec& spec);

/// The two-sided ideal generated by r_s u_e - r_s u_s, which intersects the
/// neutral component trivially.
struct WitnessIdealReport {
  CommutationWitness witness;
  Subspace ideal;            // flat subspace of the built ring
  bool avoids_neutral = false;
  bool proper_nonzero = false;
};

WitnessIdealReport witness_ideal(const SkewGroupRingSpec& spec, const CommutationWitness& w);

struct MaxCommutativeVerdict {
  bool max_commutative = false;
  std::optional<CommutationWitness> witness;
  std::string rule;
};

/// Exact: compares C_R(R_e) with R_e in the built ring, and cross-checks the
/// witness machinery (witness exists iff not maximal commutative).
MaxCommutativeVerdict verdict_max_commutative(const SkewGroupRingSpec& spec);

/// Exact: transitivity of the permutation action on the points.
GSimpleVerdict verdict_g_simple(const SkewGroupRingSpec& spec);

struct SimplicityEvidence {
  std::string kind; // "closure-sampling", "explicit-ideal", "none"
  int samples = 0;
  std::uint64_t seed = 0;
  int closures_full = 0;     // out of `samples`
  std::optional<Subspace> proper_ideal; // verified proper nonzero two-sided ideal
  std::string detail;
};

struct SimplicityReport {
  bool simple = false;
  bool exact = true; // false only for the sampling-decided twisted case
  std::string rule;
  MaxCommutativeVerdict max_commutative;
  GSimpleVerdict g_simple;
  SimplicityEvidence evidence;
};

/**
 * Simplicity verdict.  Trivial cocycle: exact, by the criterion
 * "simple iff R_e maximal commutative and the coefficient ring G-simple"
 * (for Q^X: iff the action is free and transitive), with an explicit proper
 * ideal on the negative side and closure sampling as corroboration on the
 * positive side.  Twisted one-point Z_2 instances are decided exactly by the
 * quadratic-extension rule on alpha(1,1); other twisted instances fall back
 * to closure sampling and are flagged non-exact unless a proper closure is
 * found (an explicit counterexample is exact).
 */
SimplicityReport verdict_simple(const SkewGroupRingSpec& spec, int samples, std::uint64_t seed);

} // namespace grw

#endif
