#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "grw/gallery.hpp"
#include "grw/graded.hpp"
#include "grw/rng.hpp"

using namespace grw;

namespace {

// ---- independent 3x3 rational-matrix oracle for the block-graded instance

using M3 = Eigen::Matrix<Rational, 3, 3>;

// flat coordinates of the block-graded presentation -> dense 3x3 matrix
M3 to_matrix(const GradedRing& r, const Vec& flat)
{
  const std::vector<std::pair<int, int>> even = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}};
  const std::vector<std::pair<int, int>> odd = {{0, 2}, {1, 2}, {2, 0}, {2, 1}};
  M3 m = M3::Zero();
  for (std::size_t k = 0; k < even.size(); ++k)
    m(even[k].first, even[k].second) += flat(r.offset(0) + static_cast<Index>(k));
  for (std::size_t k = 0; k < odd.size(); ++k)
    m(odd[k].first, odd[k].second) += flat(r.offset(1) + static_cast<Index>(k));
  return m;
}

Vec diag_flat(const GradedRing& r, const Rational& a, const Rational& b)
{
  // diag(a, a, b) in flat coordinates: a(E11 + E22) + b E33
  Vec v = Vec::Zero(r.total_dim());
  v(r.offset(0) + 0) = a;
  v(r.offset(0) + 3) = a;
  v(r.offset(0) + 4) = b;
  return v;
}

// Z_2-graded ring with zero odd component: Q in degree 0.
GradedRing degenerate_z2()
{
  std::vector<std::vector<std::string>> labels = {{"e"}, {}};
  std::vector<std::vector<Mat>> structure(2, std::vector<Mat>(2));
  structure[0][0] = Mat::Ones(1, 1);
  structure[0][1] = Mat(0, 0);
  structure[1][0] = Mat(0, 0);
  structure[1][1] = Mat(0, 1);
  Vec unity(1);
  unity << 1;
  return GradedRing(make_cyclic(2), labels, structure, unity);
}

// Q[Z_2] with the twist u^2 = c.
GradedRing twisted_z2(const Rational& c)
{
  std::vector<std::vector<std::string>> labels = {{"u0"}, {"u1"}};
  std::vector<std::vector<Mat>> structure(2, std::vector<Mat>(2));
  for (int g = 0; g < 2; ++g)
    for (int h = 0; h < 2; ++h) {
      Mat s(1, 1);
      s(0, 0) = (g == 1 && h == 1) ? c : Rational(1);
      structure[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] = s;
    }
  Vec unity(1);
  unity << 1;
  return GradedRing(make_cyclic(2), labels, structure, unity);
}

} // namespace

TEST_CASE("the block-graded matrix ring multiplies like matrices", "[GradedRing]")
{
  const GradedRing r = m3_z2();
  REQUIRE(r.total_dim() == 9);
  REQUIRE(r.dim(0) == 5);
  REQUIRE(r.dim(1) == 4);
  REQUIRE(r.labels(0)[0] == "E11");
  REQUIRE(r.labels(1)[2] == "E31");

  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Vec a = rng.vector(9), b = rng.vector(9);
    REQUIRE(to_matrix(r, r.mul(a, b)) == to_matrix(r, a) * to_matrix(r, b));
  }
  REQUIRE(to_matrix(r, r.unity_flat()) == M3::Identity());
}

TEST_CASE("validation accepts the fixtures and names corrupted entries", "[validate_graded()]")
{
  REQUIRE(validate_graded(m3_z2()).empty());
  REQUIRE(validate_graded(group_algebra(make_cyclic(2))).empty());
  REQUIRE(validate_graded(group_algebra(direct_product(make_cyclic(2), make_cyclic(2)))).empty());
  REQUIRE(validate_graded(degenerate_z2()).empty());
  REQUIRE(validate_graded(twisted_z2(Rational(-1))).empty());

  // corrupt one mixed product of Q[Z_2]: u0 * u1 = 2 u1 contradicts the
  // declared unity u0, and the violation names the offending basis vector
  std::vector<std::vector<std::string>> labels = {{"u0"}, {"u1"}};
  std::vector<std::vector<Mat>> structure(2, std::vector<Mat>(2, Mat::Ones(1, 1)));
  structure[0][1](0, 0) = 2; // u0 * u1 = 2 u1, while u0 is the declared unity
  Vec unity(1);
  unity << 1;
  const GradedRing bad(make_cyclic(2), labels, structure, unity);
  const auto violations = validate_graded(bad);
  REQUIRE_FALSE(violations.empty());
  bool unity_violation = false;
  for (const auto& v : violations)
    if (v.kind == "unity" && v.at == std::vector<int>{1, 0})
      unity_violation = true;
  REQUIRE(unity_violation);
}

TEST_CASE("strong gradation certificates", "[is_strongly_graded()]")
{
  REQUIRE(is_strongly_graded(m3_z2()).strongly_graded);
  REQUIRE(is_strongly_graded(group_algebra(make_cyclic(3))).strongly_graded);
  REQUIRE(is_strongly_graded(twisted_z2(Rational(-1))).strongly_graded);

  const auto cert = is_strongly_graded(degenerate_z2());
  REQUIRE_FALSE(cert.strongly_graded);
  // R_1 R_1 should reach R_0 but spans nothing
  REQUIRE(std::find(cert.failures.begin(), cert.failures.end(), std::make_pair(1, 1)) !=
          cert.failures.end());
  REQUIRE(cert.ranks[1][1] == 0);
  REQUIRE(cert.required[1][1] == 1);
}

TEST_CASE("partition of unity: solver certificate and the classical choice",
          "[partition_of_unity()]")
{
  const GradedRing r = m3_z2();
  for (int g = 0; g < 2; ++g) {
    const PartitionOfUnity p = partition_of_unity(r, g);
    REQUIRE(verify_partition(r, p));
    REQUIRE_FALSE(p.pairs.empty());
  }

  // the hand-picked decomposition 1 = E13 E31 + E23 E32 + E32 E23
  PartitionOfUnity classical;
  classical.g = 1;
  const auto unit = [&](int k) { return r.basis_flat(1, k); };
  classical.pairs = {{unit(0), unit(2)}, {unit(1), unit(3)}, {unit(3), unit(1)}};
  REQUIRE(verify_partition(r, classical));

  // degree mismatch is rejected
  PartitionOfUnity wrong = classical;
  wrong.g = 0;
  REQUIRE_FALSE(verify_partition(r, wrong));

  // second certificate exists here and verifies
  const auto p2 = second_partition_of_unity(r, 1);
  REQUIRE(p2.has_value());
  REQUIRE(verify_partition(r, *p2));

  // group rings have the one-pair partition (u_g, u_{g^-1})
  const GradedRing q4 = group_algebra(make_cyclic(4));
  for (int g = 0; g < 4; ++g) {
    const PartitionOfUnity p = partition_of_unity(q4, g);
    REQUIRE(verify_partition(q4, p));
    REQUIRE(p.pairs.size() == 1);
  }

  // not strongly graded => no partition at the empty degree
  REQUIRE_THROWS_AS(partition_of_unity(degenerate_z2(), 1), StrongGradationError);
}

TEST_CASE("commutants and centers of the block-graded instance", "[commutant()]")
{
  const GradedRing r = m3_z2();

  // C_R(R_0): via an independent dense-matrix oracle, X commutes with the
  // even component iff X is block-diagonal with scalar blocks tied as
  // diag(a, a, b) -- i.e. it equals Z(R_0)
  const Subspace c = commutant_of_neutral(r);
  REQUIRE(c.dim() == 2);
  const Subspace z = center_of_neutral(r);
  REQUIRE(z.dim() == 2);
  REQUIRE(c == z);
  REQUIRE(z.contains(diag_flat(r, Rational(1), Rational(0))));
  REQUIRE(z.contains(diag_flat(r, Rational(0), Rational(1))));

  // oracle check: every basis vector of c commutes with all even units
  for (Index k = 0; k < c.dim(); ++k) {
    const M3 x = to_matrix(r, c.basis_vector(k));
    for (Index i = 0; i < r.dim(0); ++i) {
      const M3 e = to_matrix(r, r.basis_flat(0, static_cast<int>(i)));
      REQUIRE(x * e == e * x);
    }
  }

  // C_R(Z(R_0)) is the whole even component
  REQUIRE(commutant_of_center_of_neutral(r) == r.component_subspace(0));

  // the center of the full matrix ring is the scalars
  const Subspace zr = center(r);
  REQUIRE(zr.dim() == 1);
  REQUIRE(zr.contains(diag_flat(r, Rational(1), Rational(1))));

  // commutative fixture: everything is central
  const GradedRing q2 = group_algebra(make_cyclic(2));
  REQUIRE(commutant_of_neutral(q2) == Subspace::full(2));
  REQUIRE(center(q2) == Subspace::full(2));
  REQUIRE(center_of_neutral(q2) == q2.component_subspace(0));
}

TEST_CASE("canonical action on the block-graded instance swaps the center idempotents",
          "[canonical_action()]")
{
  const GradedRing r = m3_z2();

  // sigma_1(diag(a, a, b)) = diag(b, b, a), checked against the hand
  // decomposition with independent matrix arithmetic
  const Rational a(2), b(5);
  const Vec lambda = diag_flat(r, a, b);
  const Vec image = canonical_action(r, 1, lambda);

  const M3 lam = to_matrix(r, lambda);
  const M3 e13 = to_matrix(r, r.basis_flat(1, 0));
  const M3 e23 = to_matrix(r, r.basis_flat(1, 1));
  const M3 e31 = to_matrix(r, r.basis_flat(1, 2));
  const M3 e32 = to_matrix(r, r.basis_flat(1, 3));
  const M3 oracle = e13 * lam * e31 + e23 * lam * e32 + e32 * lam * e23;
  REQUIRE(to_matrix(r, image) == oracle);
  REQUIRE(to_matrix(r, image) == to_matrix(r, diag_flat(r, b, a)));

  // neutral degree acts as the identity
  REQUIRE(canonical_action(r, 0, lambda) == lambda);

  // elements outside the commutant are rejected
  REQUIRE_THROWS(canonical_action(r, 1, r.basis_flat(0, 1)));
}

TEST_CASE("canonical action properties hold on the fixtures",
          "[verify_canonical_action_properties()]")
{
  for (const GradedRing& r :
       {m3_z2(), group_algebra(make_cyclic(2)), group_algebra(make_cyclic(3)),
        group_algebra(direct_product(make_cyclic(2), make_cyclic(2))),
        twisted_z2(Rational(-1)), twisted_z2(Rational(4))}) {
    const auto report = verify_canonical_action_properties(r);
    INFO("failures: " << (report.failures.empty() ? "none" : report.failures.front()));
    REQUIRE(report.intertwines);
    REQUIRE(report.is_group_action);
    REQUIRE(report.preserves_center_of_neutral);
    REQUIRE(report.certificate_independent);
    REQUIRE(report.fixed_points_are_center);
    REQUIRE(report.all());
  }
}

TEST_CASE("two-sided ideal closures", "[ideal_closure()]")
{
  const GradedRing r = m3_z2();
  // a single matrix unit generates everything
  REQUIRE(ideal_closure(r, {r.basis_flat(1, 2)}) == Subspace::full(9));
  // the unity generates everything
  REQUIRE(ideal_closure(r, {r.unity_flat()}) == Subspace::full(9));
  // the zero ideal
  REQUIRE(ideal_closure(r, {}).is_zero());
  REQUIRE(ideal_closure(r, {Vec::Zero(9)}).is_zero());

  // Q[Z_2]: the augmentation ideal is the line through 1 - u
  const GradedRing q2 = group_algebra(make_cyclic(2));
  Vec one_minus_u(2);
  one_minus_u << 1, -1;
  const Subspace aug = ideal_closure(q2, {one_minus_u});
  REQUIRE(aug.dim() == 1);
  REQUIRE(aug.contains(one_minus_u));
  // it misses the neutral component entirely
  REQUIRE(intersect_ideal_with(aug, q2.component_subspace(0)).is_zero());

  // closures are ideals: closed under left/right multiplication by a basis
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Vec gen = rng.nonzero_vector(q2.total_dim());
    const Subspace ideal = ideal_closure(q2, {gen});
    for (Index i = 0; i < ideal.dim(); ++i)
      for (int g = 0; g < q2.degrees(); ++g)
        for (Index j = 0; j < q2.dim(g); ++j) {
          const Vec b = q2.basis_flat(g, static_cast<int>(j));
          REQUIRE(ideal.contains(q2.mul(b, ideal.basis_vector(i))));
          REQUIRE(ideal.contains(q2.mul(ideal.basis_vector(i), b)));
        }
  }
}

TEST_CASE("random ideals meet the commutant of the neutral center", "[ideal_closure()]")
{
  // desk-scale instance of the intersection theorem: closures of random
  // nonzero elements intersect C_R(Z(R_e)) nontrivially
  Rng rng(2718);
  for (const GradedRing& r : {m3_z2(), group_algebra(make_cyclic(4)), twisted_z2(Rational(-1))}) {
    const Subspace target = commutant_of_center_of_neutral(r);
    for (int trial = 0; trial < 20; ++trial) {
      const Vec gen = rng.nonzero_vector(r.total_dim());
      const Subspace ideal = ideal_closure(r, {gen});
      REQUIRE_FALSE(intersect_ideal_with(ideal, target).is_zero());
    }
  }
}

TEST_CASE("invertible homogeneous elements and the crossed-product test",
          "[has_invertible_homogeneous()]")
{
  const GradedRing r = m3_z2();

  // odd component: excluded exactly, by the 4-vs-5 shape obstruction
  const auto odd = has_invertible_homogeneous(r, 1);
  REQUIRE_FALSE(odd.invertible_exists);
  REQUIRE(odd.exact);
  REQUIRE(odd.method == "dimension-obstruction");

  // even component: witness found and exactly verified as a matrix
  const auto even = has_invertible_homogeneous(r, 0);
  REQUIRE(even.invertible_exists);
  REQUIRE(even.exact);
  REQUIRE(even.witness.has_value());
  REQUIRE(det<Rational>(Mat(to_matrix(r, r.embed(0, *even.witness)))) != 0);

  // hence not a crossed product, despite being strongly graded
  const auto crossed = is_crossed_product(r);
  REQUIRE_FALSE(crossed.is_crossed_product);
  REQUIRE(is_strongly_graded(r).strongly_graded);

  // the twisted group ring is a crossed product: u itself is invertible
  const auto tw = is_crossed_product(twisted_z2(Rational(-1)));
  REQUIRE(tw.is_crossed_product);
  REQUIRE(tw.per_degree[1].invertible_exists);
  REQUIRE(tw.per_degree[1].exact);

  // the degenerate instance has no invertible odd element at all
  const auto none = has_invertible_homogeneous(degenerate_z2(), 1);
  REQUIRE_FALSE(none.invertible_exists);
  REQUIRE(none.exact);
}

TEST_CASE("no nonzero element annihilates a component of a strongly graded fixture",
          "[annihilator_check()]")
{
  for (const GradedRing& r : {m3_z2(), group_algebra(make_cyclic(3)), twisted_z2(Rational(-1))}) {
    const auto report = annihilator_check(r, 50, 424242);
    REQUIRE(report.pass());
    REQUIRE(report.samples == 50);
  }
}

TEST_CASE("graded element round trip between flat and per-degree form", "[GradedElement]")
{
  const GradedRing r = m3_z2();
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Vec flat = rng.vector(r.total_dim());
    REQUIRE(to_flat(r, to_graded(r, flat)) == flat);
  }
  // sparse map: only nonzero components are listed
  const GradedElement x = to_graded(r, r.basis_flat(1, 0));
  REQUIRE(x.size() == 1);
  REQUIRE(x.count(1) == 1);
}

TEST_CASE("gallery skew presentations build the expected rings", "[gallery]")
{
  SECTION("the one-point untwisted spec over Z_n is the group algebra")
  {
    for (int n : {1, 2, 3, 5}) {
      const GradedRing built = build(laurent_group_ring_spec(n));
      const GradedRing direct = group_algebra(make_cyclic(n));
      REQUIRE(built.degrees() == direct.degrees());
      for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
          REQUIRE(built.structure_row(g, 0, h, 0) == direct.structure_row(g, 0, h, 0));
    }
  }

  SECTION("the Gaussian twist squares the odd unit to -1")
  {
    const GradedRing r = build(gauss_z2_spec());
    const Vec u1 = r.basis_flat(1, 0);
    REQUIRE(r.mul(u1, u1) == -r.unity_flat());
    REQUIRE(validate_spec(gauss_z2_spec()).empty());
  }

  SECTION("the free two-point spec is valid and strongly graded")
  {
    const SkewGroupRingSpec spec = free_two_point_spec();
    REQUIRE(validate_spec(spec).empty());
    REQUIRE(is_strongly_graded(build(spec)).strongly_graded);
  }

  SECTION("single_orbit produces one cycle through every point")
  {
    const FiniteDynSystem sys = single_orbit(4);
    REQUIRE(validate_dynsys(sys).empty());
    REQUIRE(is_minimal(sys));
    REQUIRE(order_of_map(sys) == 4);
    REQUIRE_THROWS_AS(single_orbit(0), std::invalid_argument);
  }
}
