#ifndef GRW_COEFF_HPP
#define GRW_COEFF_HPP

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "grw/groups.hpp"
#include "grw/linalg.hpp"
#include "grw/poly.hpp"

namespace grw {

/**
 * The commutative ring Q^X of rational-valued functions on a finite labeled
 * point set.  Elements are coordinate vectors against the indicator basis;
 * multiplication is pointwise.
 */
struct FunctionRing {
  std::vector<std::string> points;

  int size() const { return static_cast<int>(points.size()); }
};

/// The polynomial ring Q[z].  Carries no data; elements are Poly values.
struct PolyCoeffRing {};

/// A bijection of {0, ..., n-1}; map[x] is the image of x.
struct Permutation {
  std::vector<int> map;

  int size() const { return static_cast<int>(map.size()); }
  int apply(int x) const;
  Permutation inverse() const;
  Permutation then(const Permutation& next) const; // x -> next(this(x))
  static Permutation identity(int n);
  bool is_identity() const;
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.map == b.map; }
};

/// Throws unless map is a bijection of {0..n-1}.
void validate_permutation(const Permutation& p);

/// Automorphism of Q^X induced by a point bijection: f -> f(permutation(.)).
struct PermutationInduced {
  Permutation permutation;
};

/// Automorphism of Q[z] sending f(z) to f(z + shift).
struct Shift {
  Rational shift;
};

using RingAutomorphism = std::variant<PermutationInduced, Shift>;

/// Apply to a function-ring element (coordinates on the indicator basis).
Vec apply_automorphism(const PermutationInduced& a, const Vec& f);
/// Apply to a polynomial.
Poly apply_automorphism(const Shift& a, const Poly& f);

/// Ideal of Q^X: everything vanishing outside the subset.
struct SubsetIdeal {
  std::set<int> subset;
};

/// Ideal of Q[z] generated by one polynomial.
struct PrincipalIdeal {
  Poly generator;
};

using IdealDescriptor = std::variant<SubsetIdeal, PrincipalIdeal>;

/// Orbits of the subgroup of Sym(X) generated by the given permutations,
/// listed in increasing order of their minimal element; each orbit sorted.
std::vector<std::vector<int>> orbits(int x_size, const std::vector<Permutation>& generators);

/// Is the ideal carried into itself by every listed automorphism?
bool is_g_invariant_ideal(const FunctionRing& ring, const SubsetIdeal& ideal,
                          const std::vector<PermutationInduced>& actions);
bool is_g_invariant_ideal(const PolyCoeffRing& ring, const PrincipalIdeal& ideal,
                          const std::vector<Shift>& actions);

/// Verdict of a G-simplicity check, with an explicit invariant witness ideal
/// when the answer is no.
struct GSimpleVerdict {
  bool g_simple = false;
  std::optional<IdealDescriptor> witness;
  std::string justification;
};

/**
 * Q^X is G-simple for the group generated by the actions iff the generated
 * permutation group acts transitively on X.  A non-transitive action yields
 * the smallest orbit (ties by minimal element) as an invariant SubsetIdeal
 * witness.
 */
GSimpleVerdict is_g_simple(const FunctionRing& ring, const std::vector<PermutationInduced>& actions);

/**
 * Q[z] with shift actions: G-simple iff some shift is nonzero (a nonzero
 * shift fixes no proper nonzero ideal, by the degree-and-leading-coefficient
 * argument); all shifts zero leaves the invariant witness (z).
 */
GSimpleVerdict is_g_simple(const PolyCoeffRing& ring, const std::vector<Shift>& actions);

} // namespace grw

#endif
