/// Acceptance checks for the workbench: one PASS/FAIL line per criterion.
/// Everything here is exact rational arithmetic; sampling is always seeded.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "grw/cli.hpp"
#include "grw/crystalline.hpp"
#include "grw/dynsys.hpp"
#include "grw/gallery.hpp"
#include "grw/graded.hpp"
#include "grw/json_io.hpp"
#include "grw/rng.hpp"
#include "grw/skew.hpp"

using namespace grw;

namespace {

using Fails = std::vector<std::string>;

void expect(Fails& fails, bool ok, const std::string& what)
{
  if (!ok)
    fails.push_back(what);
}

// --------------------------------------------------------------- fixtures

SkewGroupRingSpec three_cycle_spec()
{
  SkewGroupRingSpec spec;
  spec.coefficients.points = {"a", "b", "c"};
  spec.group = make_cyclic(3);
  spec.action = {Permutation::identity(3), Permutation{{1, 2, 0}}, Permutation{{2, 0, 1}}};
  return spec;
}

std::vector<std::pair<std::string, GradedRing>> gallery_instances()
{
  std::vector<std::pair<std::string, GradedRing>> out;
  out.emplace_back("M3 block-graded", m3_z2());
  out.emplace_back("M2 block-graded", matrix_units_z2(1, 1));
  out.emplace_back("Q[Z_2]", group_algebra(make_cyclic(2)));
  out.emplace_back("Q[Z_3]", group_algebra(make_cyclic(3)));
  out.emplace_back("Q[Z_2 x Z_2]",
                   group_algebra(direct_product(make_cyclic(2), make_cyclic(2))));
  out.emplace_back("free two-point skew", build(free_two_point_spec()));
  out.emplace_back("three-cycle skew", build(three_cycle_spec()));
  out.emplace_back("Gaussian twist", build(gauss_z2_spec()));
  out.emplace_back("Laurent Z_4", build(laurent_group_ring_spec(4)));
  return out;
}

bool neutral_commutative(const GradedRing& r)
{
  for (int i = 0; i < r.dim(0); ++i)
    for (int j = i + 1; j < r.dim(0); ++j) {
      const Vec a = r.basis_flat(0, i), b = r.basis_flat(0, j);
      if (r.mul(a, b) != r.mul(b, a))
        return false;
    }
  return true;
}

// ------------------------------------------------- action-sweep machinery

std::vector<Permutation> all_perms(int n)
{
  std::vector<int> base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 0);
  std::vector<Permutation> out;
  do
    out.push_back(Permutation{base});
  while (std::next_permutation(base.begin(), base.end()));
  return out;
}

std::vector<int> generating_set(const FiniteGroup& g)
{
  const auto closure = [&](std::vector<int> seed) {
    std::set<int> have(seed.begin(), seed.end());
    have.insert(0);
    bool changed = true;
    while (changed) {
      changed = false;
      const std::vector<int> now(have.begin(), have.end());
      for (int x : now)
        for (int y : now)
          if (have.insert(op(g, x, y)).second)
            changed = true;
    }
    return static_cast<int>(have.size()) == g.order();
  };
  for (int x = 1; x < g.order(); ++x)
    if (closure({x}))
      return {x};
  for (int x = 1; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y)
      if (closure({x, y}))
        return {x, y};
  throw std::logic_error("no generating set of size <= 2");
}

/// Extends generator images to a homomorphism G -> Sym(X), or reports a clash.
std::optional<std::vector<Permutation>> extend_action(const FiniteGroup& g,
                                                      const std::vector<int>& gens,
                                                      const std::vector<Permutation>& images,
                                                      int n)
{
  std::vector<std::optional<Permutation>> f(static_cast<std::size_t>(g.order()));
  f[0] = Permutation::identity(n);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    auto& slot = f[static_cast<std::size_t>(gens[k])];
    if (slot && !(*slot == images[k]))
      return std::nullopt;
    slot = images[k];
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < g.order(); ++x) {
      if (!f[static_cast<std::size_t>(x)])
        continue;
      for (int y = 0; y < g.order(); ++y) {
        if (!f[static_cast<std::size_t>(y)])
          continue;
        const Permutation image =
            f[static_cast<std::size_t>(x)]->then(*f[static_cast<std::size_t>(y)]);
        auto& slot = f[static_cast<std::size_t>(op(g, x, y))];
        if (!slot) {
          slot = image;
          changed = true;
        } else if (!(*slot == image)) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Permutation> action;
  for (const auto& p : f) {
    if (!p)
      return std::nullopt;
    action.push_back(*p);
  }
  return action;
}

std::vector<int> action_key(const std::vector<Permutation>& action, const Permutation& tau)
{
  std::vector<int> key;
  const Permutation pre = tau.inverse();
  for (const Permutation& p : action) {
    const Permutation q = pre.then(p).then(tau);
    key.insert(key.end(), q.map.begin(), q.map.end());
  }
  return key;
}

/// All homomorphisms G -> Sym(X), one representative per simultaneous
/// relabeling class of the points.
std::vector<std::vector<Permutation>> actions_up_to_relabeling(const FiniteGroup& g, int n)
{
  const std::vector<int> gens = generating_set(g);
  const std::vector<Permutation> perms = all_perms(n);
  std::set<std::vector<int>> seen;
  std::vector<std::vector<Permutation>> out;
  std::vector<std::size_t> choice(gens.size(), 0);
  while (true) {
    std::vector<Permutation> images;
    for (std::size_t k = 0; k < gens.size(); ++k)
      images.push_back(perms[choice[k]]);
    if (const auto action = extend_action(g, gens, images, n)) {
      std::vector<int> canon = action_key(*action, perms.front());
      for (const Permutation& tau : perms)
        canon = std::min(canon, action_key(*action, tau));
      if (seen.insert(canon).second)
        out.push_back(*action);
    }
    std::size_t k = 0;
    for (; k < choice.size(); ++k) {
      if (++choice[k] < perms.size())
        break;
      choice[k] = 0;
    }
    if (k == choice.size())
      break;
  }
  return out;
}

std::vector<SkewGroupRingSpec> sweep_specs()
{
  std::vector<FiniteGroup> groups = {make_cyclic(2), make_cyclic(3), make_cyclic(4),
                                     direct_product(make_cyclic(2), make_cyclic(2))};
  std::vector<SkewGroupRingSpec> specs;
  for (int n = 1; n <= 5; ++n)
    for (const FiniteGroup& g : groups)
      for (auto& action : actions_up_to_relabeling(g, n)) {
        SkewGroupRingSpec spec;
        for (int x = 0; x < n; ++x)
          spec.coefficients.points.push_back("p" + std::to_string(x));
        spec.group = g;
        spec.action = std::move(action);
        specs.push_back(std::move(spec));
      }
  return specs;
}

bool action_is_free(const SkewGroupRingSpec& spec)
{
  for (std::size_t g = 1; g < spec.action.size(); ++g)
    for (int x = 0; x < spec.coefficients.size(); ++x)
      if (spec.action[g].apply(x) == x)
        return false;
  return true;
}

bool action_is_transitive(const SkewGroupRingSpec& spec)
{
  return orbits(spec.coefficients.size(), spec.action).size() == 1;
}

bool ideal_verified(const GradedRing& r, const Subspace& ideal)
{
  if (ideal.is_zero() || ideal.dim() >= r.total_dim())
    return false;
  std::vector<Vec> gens;
  for (Index i = 0; i < ideal.dim(); ++i)
    gens.push_back(ideal.basis_vector(i));
  return ideal_closure(r, gens) == ideal;
}

// ------------------------------------------------------------- criteria

void criterion_matrix_gallery(Fails& fails)
{
  const GradedRing r = m3_z2();
  expect(fails, validate_graded(r).empty(), "presentation violations found");
  expect(fails, is_strongly_graded(r).strongly_graded, "not strongly graded");

  const CrossedProductVerdict cp = is_crossed_product(r);
  expect(fails, !cp.is_crossed_product, "claimed to be a crossed product");
  for (const InvertibilityVerdict& v : cp.per_degree)
    if (v.g == 1) {
      expect(fails, !v.invertible_exists, "odd invertible element claimed");
      expect(fails, v.exact, "odd-component verdict is not exact: " + v.method);
    }

  const Subspace cn = commutant_of_neutral(r);
  const Subspace zn = center_of_neutral(r);
  expect(fails, cn == zn && cn.dim() == 2,
         "commutant of the neutral component is not its center of dimension 2");

  // The explicit decomposition E13*E31 + E23*E32 + E32*E23 = 1 at degree 1.
  // Odd basis order: E13, E23, E31, E32.
  PartitionOfUnity part;
  part.g = 1;
  part.pairs = {{r.basis_flat(1, 0), r.basis_flat(1, 2)},
                {r.basis_flat(1, 1), r.basis_flat(1, 3)},
                {r.basis_flat(1, 3), r.basis_flat(1, 1)}};
  expect(fails, verify_partition(r, part), "explicit partition of unity fails");

  // Even-center lattice: two orthogonal idempotents, two nontrivial ideals,
  // swapped by the canonical action of the nontrivial degree.
  Vec u = Vec::Zero(r.total_dim()), v = Vec::Zero(r.total_dim());
  u += r.basis_flat(0, 0); // E11
  u += r.basis_flat(0, 3); // E22
  v += r.basis_flat(0, 4); // E33
  expect(fails, zn.contains(u) && zn.contains(v), "idempotents missing from Z(R_e)");
  expect(fails, r.mul(u, u) == u && r.mul(v, v) == v, "u, v are not idempotent");
  expect(fails, r.mul(u, v) == Vec::Zero(r.total_dim()), "u v != 0");
  expect(fails, Vec(u + v) == r.unity_flat(), "u + v != 1");

  // Coordinates of w in the basis of Z(R_e), then multiplication operators.
  const Mat basis_cols = zn.basis().transpose();
  const auto coords = [&](const Vec& w) {
    const auto c = solve(basis_cols, w);
    if (!c)
      throw std::logic_error("element outside Z(R_e)");
    return *c;
  };
  Mat mu(2, 2), mv(2, 2);
  for (Index i = 0; i < 2; ++i) {
    mu.col(i) = coords(r.mul(u, zn.basis_vector(i)));
    mv.col(i) = coords(r.mul(v, zn.basis_vector(i)));
  }
  // Rank-one complementary projections have eigenvalues {0, 1} with
  // one-dimensional eigenspaces, so their eigenlines span{u}, span{v} are the
  // only candidate invariant lines: exactly two nontrivial ideals.
  expect(fails, Mat(mu * mu) == mu && Mat(mv * mv) == mv, "multiplications not idempotent");
  expect(fails, Mat(mu + mv) == Mat(Mat::Identity(2, 2)), "projections not complementary");
  expect(fails, Mat(mu * mv) == Mat(Mat::Zero(2, 2)), "projections not orthogonal");
  expect(fails, rank(mu) == 1 && rank(mv) == 1, "projections not rank one");
  expect(fails, Vec(mu * coords(u)) == coords(u) && Vec(mu * coords(v)) == Vec(Vec::Zero(2)),
         "u, v are not the eigenvectors");

  // sigma_1 swaps the idempotents, so neither ideal is invariant.
  expect(fails, canonical_action(r, 1, u) == v && canonical_action(r, 1, v) == u,
         "canonical action does not swap the central idempotents");
}

void criterion_canonical_action(Fails& fails)
{
  for (const auto& [name, r] : gallery_instances()) {
    if (!is_strongly_graded(r).strongly_graded) {
      fails.push_back(name + ": not strongly graded");
      continue;
    }
    const CanonicalActionReport rep = verify_canonical_action_properties(r);
    if (!rep.all()) {
      std::string detail = name + ":";
      for (const std::string& f : rep.failures)
        detail += " " + f;
      fails.push_back(detail);
    }
  }
}

void criterion_intersections(Fails& fails)
{
  std::uint64_t seed = 2026;
  for (const auto& [name, r] : gallery_instances()) {
    const Subspace czn = commutant_of_center_of_neutral(r);
    const Subspace cn = commutant_of_neutral(r);
    const bool re_commutative = neutral_commutative(r);
    Rng rng(seed++);
    for (int trial = 0; trial < 100; ++trial) {
      const Subspace ideal = ideal_closure(r, {rng.nonzero_vector(r.total_dim())});
      if (intersect_ideal_with(ideal, czn).is_zero()) {
        fails.push_back(name + ": trial " + std::to_string(trial) +
                        " misses C_R(Z(R_e))");
        return;
      }
      if (re_commutative && intersect_ideal_with(ideal, cn).is_zero()) {
        fails.push_back(name + ": trial " + std::to_string(trial) + " misses C_R(R_e)");
        return;
      }
    }
  }
}

std::string spec_tag(const SkewGroupRingSpec& spec, std::size_t idx)
{
  return "instance " + std::to_string(idx) + " (|X|=" +
         std::to_string(spec.coefficients.size()) +
         ", |G|=" + std::to_string(spec.group.order()) + ")";
}

void criterion_skew_equivalence(Fails& fails, const std::vector<SkewGroupRingSpec>& sweep)
{
  for (std::size_t idx = 0; idx < sweep.size(); ++idx) {
    const SkewGroupRingSpec& spec = sweep[idx];
    if (!validate_spec(spec).empty()) {
      fails.push_back(spec_tag(spec, idx) + ": invalid spec");
      continue;
    }
    const GradedRing r = build(spec);
    const Subspace neutral = r.component_subspace(0);
    const bool max_comm = commutant_of_neutral(r) == neutral;
    const auto witness = find_commutation_witness(spec);
    if (witness.has_value() == max_comm) {
      fails.push_back(spec_tag(spec, idx) + ": witness presence contradicts commutant");
      continue;
    }
    if (witness) {
      const WitnessIdealReport rep = witness_ideal(spec, *witness);
      const bool avoids = intersect_ideal_with(rep.ideal, neutral).is_zero();
      if (!rep.avoids_neutral || !rep.proper_nonzero || !avoids ||
          !ideal_verified(r, rep.ideal))
        fails.push_back(spec_tag(spec, idx) + ": witness ideal fails verification");
    } else {
      Rng rng(9000 + static_cast<std::uint64_t>(idx));
      for (int trial = 0; trial < 50; ++trial) {
        const Subspace ideal = ideal_closure(r, {rng.nonzero_vector(r.total_dim())});
        if (intersect_ideal_with(ideal, neutral).is_zero()) {
          fails.push_back(spec_tag(spec, idx) + ": sampled ideal avoids R_e");
          break;
        }
      }
    }
  }
}

void criterion_simplicity_sweep(Fails& fails, const std::vector<SkewGroupRingSpec>& sweep)
{
  for (std::size_t idx = 0; idx < sweep.size(); ++idx) {
    const SkewGroupRingSpec& spec = sweep[idx];
    const bool should_be_simple = action_is_free(spec) && action_is_transitive(spec);
    const SimplicityReport rep =
        verdict_simple(spec, 50, 40000 + static_cast<std::uint64_t>(idx));
    if (rep.simple != should_be_simple) {
      fails.push_back(spec_tag(spec, idx) + ": verdict disagrees with free+transitive");
      continue;
    }
    if (!rep.exact) {
      fails.push_back(spec_tag(spec, idx) + ": untwisted verdict not exact");
      continue;
    }
    if (rep.simple) {
      if (rep.evidence.kind == "closure-sampling" &&
          rep.evidence.closures_full != rep.evidence.samples)
        fails.push_back(spec_tag(spec, idx) + ": some sampled closure was proper");
    } else {
      if (!rep.evidence.proper_ideal || !ideal_verified(build(spec), *rep.evidence.proper_ideal))
        fails.push_back(spec_tag(spec, idx) + ": no verified proper ideal emitted");
    }
  }
}

void criterion_gaussian(Fails& fails)
{
  const SkewGroupRingSpec spec = gauss_z2_spec();
  const SimplicityReport rep = verdict_simple(spec, 50, 77);
  expect(fails, rep.simple && rep.exact, "twist by -1 not recognized as simple");
  expect(fails, verdict_g_simple(spec).g_simple, "one-point coefficients not G-simple");
  const GradedRing r = build(spec);
  expect(fails, !(commutant_of_neutral(r) == r.component_subspace(0)),
         "neutral component wrongly maximal commutative");
  expect(fails, !rep.max_commutative.max_commutative,
         "verdict wrongly claims maximal commutativity");
  expect(fails, rep.g_simple.g_simple, "verdict misses G-simplicity");
}

void criterion_weyl(Fails& fails)
{
  const CrystallineCheckReport ax =
      check_crystalline_axioms([](int m, int n) { return weyl_alpha(m, n); }, 4);
  if (!ax.all())
    for (const std::string& f : ax.failures)
      fails.push_back("axioms: " + f);

  const Poly z = Poly::var();
  expect(fails, weyl_alpha(1, -1) == z, "alpha(1,-1) != z");
  expect(fails, weyl_alpha(-1, 1) == z - Poly::one(), "alpha(-1,1) != z-1");
  for (int n = -4; n <= 4; ++n)
    expect(fails, weyl_alpha(n, -n) == weyl_sigma(n, weyl_alpha(-n, n)),
           "inverse identity fails at n=" + std::to_string(n));

  expect(fails, is_g_simple(PolyCoeffRing{}, {Shift{Rational(1)}}).g_simple,
         "Q[z] not shift-G-simple");
  Rng rng(501);
  for (int trial = 0; trial < 100; ++trial) {
    const int degree = static_cast<int>(rng.int_in(1, 4));
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
    for (int k = 0; k < degree; ++k)
      coeffs[static_cast<std::size_t>(k)] = rng.rational();
    coeffs[static_cast<std::size_t>(degree)] = rng.nonzero_rational();
    const Poly f(coeffs);
    if (is_g_invariant_ideal(PolyCoeffRing{}, PrincipalIdeal{f}, {Shift{Rational(1)}})) {
      fails.push_back("principal ideal (" + f.to_string() + ") claimed shift-invariant");
      break;
    }
  }

  const WeylGSimplicityReport gs = weyl_g_simplicity_report(4, true);
  expect(fails, gs.neutral_witness_proper, "(z) not recognized as proper nonzero");
  expect(fails, gs.neutral_witness_escapes, "(z) not moved by any shift");
  expect(fails, gs.coefficients_g_simple.g_simple, "report misses G-simplicity");
  expect(fails, weyl_bounded_commutant_of_z(4).equals_z_polynomials,
         "windowed commutant of z is not Q[z]");
}

std::vector<std::vector<int>> partitions_of(int n)
{
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  const std::function<void(int, int)> descend = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(rest, max_part); part >= 1; --part) {
      current.push_back(part);
      descend(rest - part, part);
      current.pop_back();
    }
  };
  descend(n, n);
  return out;
}

FiniteDynSystem system_of_cycle_type(const std::vector<int>& parts)
{
  FiniteDynSystem sys;
  int base = 0;
  for (int len : parts) {
    for (int i = 0; i < len; ++i) {
      sys.space.points.push_back("x" + std::to_string(base + i));
      sys.h.map.push_back(base + (i + 1) % len);
    }
    base += len;
  }
  return sys;
}

CrossedElement random_crossed(Rng& rng, const FiniteDynSystem& sys, bool force_member)
{
  CrossedElement a;
  const int terms = static_cast<int>(rng.int_in(1, 3));
  for (int t = 0; t < terms; ++t) {
    const long n = rng.int_in(-2, 2);
    Vec f = rng.vector(sys.space.size());
    if (force_member) {
      Vec masked = Vec::Zero(sys.space.size());
      for (int x : per_n(sys, n))
        masked(x) = f(x);
      f = masked;
    }
    a = crossed_add(a, crossed_monomial(sys, n, f));
  }
  return a;
}

bool commutes_with_functions(const FiniteDynSystem& sys, const CrossedElement& a)
{
  for (int x = 0; x < sys.space.size(); ++x) {
    Vec d = Vec::Zero(sys.space.size());
    d(x) = 1;
    const CrossedElement fx = crossed_monomial(sys, 0, d);
    if (!(crossed_mul(sys, a, fx) == crossed_mul(sys, fx, a)))
      return false;
  }
  return true;
}

void criterion_dynsys(Fails& fails)
{
  std::uint64_t seed = 3000;
  for (int n = 1; n <= 7; ++n)
    for (const auto& parts : partitions_of(n)) {
      const FiniteDynSystem sys = system_of_cycle_type(parts);
      const std::string tag = "|X|=" + std::to_string(n) + " cycle type (" +
                              std::to_string(parts.size()) + " orbits)";
      const DynSysVerdicts v = dynsys_verdicts(sys);
      const bool single_orbit_now = orbits(n, {sys.h}).size() == 1;
      expect(fails, v.minimal == single_orbit_now, tag + ": minimal != single orbit");
      expect(fails, v.minimal_matches_z_simple, tag + ": minimality vs Z-simplicity");
      expect(fails, v.z_simple.g_simple == v.minimal, tag + ": Z-simple flag wrong");
      expect(fails, !v.top_free, tag + ": claimed topologically free");
      expect(fails, !v.max_commutative && v.commutant_witness.has_value(),
             tag + ": missing commutant witness");
      expect(fails, !v.simple, tag + ": claimed simple");

      Rng rng(seed++);
      for (int trial = 0; trial < 200; ++trial) {
        const CrossedElement a = random_crossed(rng, sys, trial % 4 == 0);
        if (commutant_membership(sys, a).member != commutes_with_functions(sys, a)) {
          fails.push_back(tag + ": membership lemma disagrees at trial " +
                          std::to_string(trial));
          break;
        }
      }
    }

  for (int p : {1, 2, 3, 5}) {
    const FiniteDynSystem sys = single_orbit(p);
    const PiReport rep = verify_pi(sys, 1, 100, 600 + static_cast<std::uint64_t>(p));
    const std::string tag = "p=" + std::to_string(p);
    if (!rep.all()) {
      for (const std::string& f : rep.failures)
        fails.push_back(tag + ": " + f);
      continue;
    }
    const Index half_width = static_cast<Index>(p) * 2; // p(D+1) with D = 1
    expect(fails, rep.domain_dim == static_cast<Index>(p) * (2 * half_width + 1),
           tag + ": domain dimension " + std::to_string(rep.domain_dim));
    expect(fails, rep.window_dim == static_cast<Index>(p) * p * 3,
           tag + ": window dimension " + std::to_string(rep.window_dim));
    expect(fails, rep.samples == 100 && rep.homomorphism_on_samples,
           tag + ": homomorphism sampling incomplete");
    expect(fails, rep.shift_power_is_t, tag + ": shift power is not t");
  }
}

void criterion_determinism(Fails& fails)
{
  const auto emit = [](const std::vector<std::string>& args) {
    std::ostringstream out;
    const int rc = run(args, out);
    return std::make_pair(rc, out.str());
  };
  const auto save = [&](const std::string& stem, const std::vector<std::string>& args) {
    const auto [rc, text] = emit(args);
    if (rc != 0)
      throw std::runtime_error("gallery emission failed for " + stem);
    const auto path =
        std::filesystem::temp_directory_path() / ("grw_acceptance_" + stem + ".json");
    std::ofstream f(path);
    f << text;
    return path.string();
  };
  const std::string m3 = save("m3", {"gallery", "m3-z2"});
  const std::string free2 = save("free2", {"gallery", "free-2pt"});
  const std::string orbit = save("orbit", {"gallery", "single-orbit", "--n", "4"});

  const std::vector<std::vector<std::string>> invocations = {
      {"gallery"},
      {"gallery", "laurent", "--n", "3"},
      {"validate", "--input", m3},
      {"strong", "--input", m3},
      {"commutant", "--input", m3},
      {"action", "--input", m3},
      {"ideals", "--input", m3, "--samples", "25", "--seed", "11"},
      {"simplicity", "--input", free2, "--samples", "25", "--seed", "11"},
      {"simplicity", "--input", m3, "--samples", "25", "--seed", "11"},
      {"simplicity", "--input", orbit},
      {"weyl", "--bound", "3"},
      {"dynsys", "--input", orbit, "--bound", "1", "--samples", "25", "--seed", "11"},
  };
  for (const auto& args : invocations) {
    const auto first = emit(args);
    const auto second = emit(args);
    if (first != second) {
      std::string joined;
      for (const std::string& a : args)
        joined += a + " ";
      fails.push_back("output differs across runs: " + joined);
    }
  }
}

} // namespace

int main()
{
  const std::vector<SkewGroupRingSpec> sweep = sweep_specs();

  std::vector<std::pair<std::string, std::function<void(Fails&)>>> criteria = {
      {"1. block-graded matrix instance: structure, partition, center lattice",
       criterion_matrix_gallery},
      {"2. canonical action properties on all strongly graded instances",
       criterion_canonical_action},
      {"3. nonzero ideals meet the commutant of the neutral center (100 seeded each)",
       criterion_intersections},
      {"4. maximal commutativity <-> every nonzero ideal meets R_e (sweep of " +
           std::to_string(sweep.size()) + " action classes)",
       [&](Fails& f) { criterion_skew_equivalence(f, sweep); }},
      {"5. simple <-> free and transitive, with verified evidence (same sweep)",
       [&](Fails& f) { criterion_simplicity_sweep(f, sweep); }},
      {"6. twist by -1: simple and G-simple without maximal commutativity",
       criterion_gaussian},
      {"7. Weyl algebra: crystalline axioms, alpha table, shift-G-simplicity",
       criterion_weyl},
      {"8. finite dynamical systems: verdicts, membership lemma, Laurent matrices",
       criterion_dynsys},
      {"9. byte-identical reports across repeated seeded runs", criterion_determinism},
  };

  int failures = 0;
  for (auto& [label, body] : criteria) {
    Fails fails;
    try {
      body(fails);
    } catch (const std::exception& e) {
      fails.push_back(std::string("exception: ") + e.what());
    }
    if (fails.empty()) {
      std::cout << "[PASS] " << label << "\n";
    } else {
      ++failures;
      std::cout << "[FAIL] " << label << "\n";
      for (const std::string& f : fails)
        std::cout << "       - " << f << "\n";
    }
  }
  if (failures == 0)
    std::cout << "all acceptance criteria hold\n";
  else
    std::cout << failures << " criterion(s) failed\n";
  return failures;
}
