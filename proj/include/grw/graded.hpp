#ifndef GRW_GRADED_HPP
#define GRW_GRADED_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "grw/groups.hpp"
#include "grw/multipoly.hpp"
#include "grw/subspace.hpp"

namespace grw {

/**
 * A finite-dimensional algebra over Q graded by a finite group, presented by
 * structure constants: for each pair (g, h) of degrees, the product of basis
 * vectors b_i^g * b_j^h is stored as a coordinate vector in the basis of the
 * degree-g*h component.  Components may be zero-dimensional.
 *
 * Elements are handled in two coordinate systems: per-component vectors and
 * "flat" vectors over the concatenation of all component bases (component
 * order = group element order, offsets fixed by the presentation).
 */
class GradedRing {
public:
  GradedRing(FiniteGroup group, std::vector<std::vector<std::string>> labels,
             // structure[g][h] has one row per pair (i, j), row index i*dim(h)+j,
             // and dim(g*h) columns
             std::vector<std::vector<Mat>> structure, Vec unity);

  const FiniteGroup& group() const { return group_; }
  int degrees() const { return group_.order(); }
  Index dim(int g) const;
  Index total_dim() const { return total_; }
  Index offset(int g) const;
  const std::vector<std::string>& labels(int g) const;

  /// Coordinates (in component g*h) of b_i^g * b_j^h.
  Vec structure_row(int g, int i, int h, int j) const;

  /// Unity coordinates inside the neutral component.
  const Vec& unity() const { return unity_; }
  Vec unity_flat() const;

  /// Product of flat vectors.
  Vec mul(const Vec& a, const Vec& b) const;
  /// Matrix of x * (.) acting on flat coordinates.
  Mat left_mult(const Vec& x) const;
  /// Matrix of (.) * x acting on flat coordinates.
  Mat right_mult(const Vec& x) const;

  /// The component R_g as a subspace of flat coordinates.
  Subspace component_subspace(int g) const;
  /// Flat basis vector (g, i).
  Vec basis_flat(int g, int i) const;
  /// Embed a component vector into flat coordinates.
  Vec embed(int g, const Vec& component) const;
  /// Extract the degree-g part of a flat vector.
  Vec component_of(const Vec& flat, int g) const;

private:
  FiniteGroup group_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::vector<Mat>> structure_;
  Vec unity_;
  std::vector<Index> offsets_;
  Index total_ = 0;
};

/// Graded element as a degree-indexed map of component coordinate vectors;
/// only nonzero components are listed.
using GradedElement = std::map<int, Vec>;

GradedElement to_graded(const GradedRing& r, const Vec& flat);
Vec to_flat(const GradedRing& r, const GradedElement& x);

/// One violated presentation axiom, with the basis indices that witness it.
struct GradedViolation {
  std::string kind; // "shape", "unity", "associativity"
  std::vector<int> at;
  std::string detail;
};

/**
 * Checks the presentation is a unital associative algebra: structure tables
 * have the declared shapes, the declared unity is a two-sided identity on
 * every basis vector, and associativity holds on all basis triples.
 */
std::vector<GradedViolation> validate_graded(const GradedRing& r);

/// Per-pair certificate that R_g * R_h spans R_{gh}.
struct StrongGradationCertificate {
  bool strongly_graded = false;
  // ranks[g][h] = dim span(R_g R_h); required[g][h] = dim R_{gh}
  std::vector<std::vector<Index>> ranks;
  std::vector<std::vector<Index>> required;
  std::vector<std::pair<int, int>> failures; // pairs (g, h) that fall short
};

StrongGradationCertificate is_strongly_graded(const GradedRing& r);

/**
 * A finite family (a_i, b_i) with a_i in R_g, b_i in R_{g^-1} and
 * sum a_i b_i = 1, represented in flat coordinates.
 */
struct PartitionOfUnity {
  int g = 0;
  std::vector<std::pair<Vec, Vec>> pairs;
};

/// Thrown when a partition of unity is requested at a degree where
/// R_g R_{g^-1} does not reach the unity.
struct StrongGradationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/**
 * Solves for a partition of unity at degree g.  The canonical certificate
 * sets all free variables of the underlying linear system to zero; when the
 * solution space is positive-dimensional a second, different certificate is
 * available for cross-checking.
 */
PartitionOfUnity partition_of_unity(const GradedRing& r, int g);
std::optional<PartitionOfUnity> second_partition_of_unity(const GradedRing& r, int g);

/// Exact verification: degrees match and sum a_i b_i = 1.
bool verify_partition(const GradedRing& r, const PartitionOfUnity& p);

/// Commutant of a family of flat elements, as a subspace of flat coordinates.
Subspace commutant(const GradedRing& r, const std::vector<Vec>& generators);

Subspace center(const GradedRing& r);
/// Z(R_e): elements of the neutral component commuting with all of R_e.
Subspace center_of_neutral(const GradedRing& r);
/// C_R(Z(R_e)).
Subspace commutant_of_center_of_neutral(const GradedRing& r);
/// C_R(R_e).
Subspace commutant_of_neutral(const GradedRing& r);

/**
 * The canonical degree-g transfer sigma_g(lambda) = sum a_i lambda b_i on the
 * commutant of the neutral component, computed from a partition of unity.
 * Pre: lambda (flat) lies in C_R(R_e); checked, throws otherwise.
 */
Vec canonical_action(const GradedRing& r, int g, const Vec& lambda);

/// Everything verify_canonical_action_properties establishes, as data.
struct CanonicalActionReport {
  bool intertwines = false;        // r_g lambda = sigma_g(lambda) r_g on bases
  bool is_group_action = false;    // sigma_g sigma_h = sigma_gh, each sigma_g bijective
  bool preserves_center_of_neutral = false;
  bool certificate_independent = false; // same values from a second partition
  bool fixed_points_are_center = false; // C_R(R_e)^G = Z(R)
  std::vector<std::string> failures;

  bool all() const
  {
    return intertwines && is_group_action && preserves_center_of_neutral &&
           certificate_independent && fixed_points_are_center;
  }
};

CanonicalActionReport verify_canonical_action_properties(const GradedRing& r);

/// Smallest two-sided ideal containing the generators, as a flat subspace.
Subspace ideal_closure(const GradedRing& r, const std::vector<Vec>& generators);

/// Intersection helper (alias for Subspace::intersect, named for reports).
Subspace intersect_ideal_with(const Subspace& ideal, const Subspace& other);

/// Outcome of the search for an invertible element inside one component.
struct InvertibilityVerdict {
  int g = 0;
  bool invertible_exists = false;
  bool exact = true; // false only when a sampling fallback decided "no"
  std::string method; // "dimension-obstruction", "block-determinant", "sampling"
  std::optional<Vec> witness; // component coordinates of an invertible element
  std::string detail;
};

/**
 * Decides whether R_g contains an invertible element.  Left multiplication by
 * x in R_g maps R_h into R_{gh}; the full symbolic determinant therefore
 * factors along these blocks.  A dimension mismatch makes the determinant
 * identically zero by shape (exact, no expansion); otherwise each block's
 * symbolic determinant is expanded (the cap applies per block) and a witness
 * is located by deterministic point search.
 */
InvertibilityVerdict has_invertible_homogeneous(const GradedRing& r, int g);

struct CrossedProductVerdict {
  bool is_crossed_product = false;
  std::vector<InvertibilityVerdict> per_degree;
};

/// Strongly graded + an invertible element in every component.
CrossedProductVerdict is_crossed_product(const GradedRing& r);

/// Sampling check that no nonzero element annihilates a whole component.
struct AnnihilatorReport {
  int samples = 0;
  std::uint64_t seed = 0;
  int failures = 0;
  std::vector<std::string> failure_detail;
  bool pass() const { return failures == 0; }
};

AnnihilatorReport annihilator_check(const GradedRing& r, int samples, std::uint64_t seed);

} // namespace grw

#endif
