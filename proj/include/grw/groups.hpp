#ifndef GRW_GROUPS_HPP
#define GRW_GROUPS_HPP

#include <string>
#include <vector>

namespace grw {

/**
 * Finite group on elements {0, ..., order-1} given by its full Cayley table.
 * table[x][y] is the product x*y; element 0 is required to be the identity by
 * every constructor here, and validate_group checks it for arbitrary input.
 */
struct FiniteGroup {
  std::vector<std::vector<int>> table;
  std::vector<std::string> labels;

  int order() const { return static_cast<int>(table.size()); }
};

/// One violated group axiom, reported as data with the witnesses named.
struct GroupViolation {
  std::string kind;    // "closure", "associativity", "identity", "inverse", "shape"
  std::vector<int> at; // the offending element/pair/triple indices
  std::string detail;
};

/// Cyclic group Z_n with labels "0".."n-1"; n >= 1 required.
FiniteGroup make_cyclic(int n);

/// Direct product with pair labels "(a,b)"; element (x1,y1)*(x2,y2) computed
/// componentwise.  Index of (x,y) is x*b.order() + y.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/**
 * Exhaustive axiom check over all triples: closure and table shape,
 * associativity, two-sided identity at index 0, two-sided inverses.
 * Returns every violation found (empty means the table is a group).
 */
std::vector<GroupViolation> validate_group(const FiniteGroup& g);

int op(const FiniteGroup& g, int x, int y);
int inv(const FiniteGroup& g, int x); // throws if x has no inverse
int order_of(const FiniteGroup& g, int x);

/// The additive group of integers, used as a grading group structurally
/// (elements are long values; no table is materialized).
struct IntegerGroup {};

} // namespace grw

#endif
