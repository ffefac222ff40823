#ifndef GRW_GALLERY_HPP
#define GRW_GALLERY_HPP

#include "grw/dynsys.hpp"
#include "grw/graded.hpp"
#include "grw/skew.hpp"

namespace grw {

/**
 * Matrix algebra M_{p+q}(Q) with the Z_2 grading induced by the block
 * partition {first p rows/columns} | {last q}: a matrix unit E_ij is even
 * when i and j fall in the same block and odd otherwise.  Basis order:
 * even component lists the p-block units row-major, then the q-block ones;
 * odd component lists the upper-right cross units, then the lower-left.
 */
GradedRing matrix_units_z2(int p, int q);

/// The 3x3 instance: M_3(Q), blocks {1,2} | {3}.
GradedRing m3_z2();

/// The group algebra Q[G] graded by G itself (one basis vector u_g per degree).
GradedRing group_algebra(const FiniteGroup& g);

/**
 * Q graded by Z_2 with the twist u_1^2 = -1: the Gaussian rationals Q(i)
 * presented as a twisted group ring over a single point.
 */
SkewGroupRingSpec gauss_z2_spec();

/// Q[Z_n] as a skew presentation: one point, trivial action, no twist.
SkewGroupRingSpec laurent_group_ring_spec(int n);

/// Functions on two points with Z_2 swapping them; the free, transitive case.
SkewGroupRingSpec free_two_point_spec();

/// The dynamical system on p points cycling 0 -> 1 -> ... -> p-1 -> 0.
FiniteDynSystem single_orbit(int p);

} // namespace grw

#endif
