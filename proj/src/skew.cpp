#include "grw/skew.hpp"

#include <sstream>
#include <stdexcept>

#include "grw/rng.hpp"

namespace grw {

namespace {

std::string join(const std::vector<std::string>& parts)
{
  std::ostringstream out;
  for (std::size_t i = 0; i < parts.size(); ++i)
    out << (i ? "; " : "") << parts[i];
  return out.str();
}

Vec ones(Index n)
{
  return Vec::Constant(n, Rational(1));
}

/// alpha(g, h) with the trivial cocycle filled in when none is stored.
Vec cocycle_value(const SkewGroupRingSpec& spec, int g, int h)
{
  if (spec.cocycle)
    return (*spec.cocycle)[g][h];
  return ones(spec.coefficients.size());
}

bool is_rational_square(const Rational& c, Rational& root)
{
  if (c <= 0)
    return false;
  const Integer num = boost::multiprecision::numerator(c);
  const Integer den = boost::multiprecision::denominator(c);
  const Integer sn = boost::multiprecision::sqrt(num);
  const Integer sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den)
    return false;
  root = Rational(sn, sd);
  return true;
}

} // namespace

bool SkewGroupRingSpec::has_trivial_cocycle() const
{
  if (!cocycle)
    return true;
  for (const auto& row : *cocycle)
    for (const Vec& value : row)
      if (value != ones(value.size()))
        return false;
  return true;
}

std::vector<std::string> validate_spec(const SkewGroupRingSpec& spec)
{
  std::vector<std::string> problems;
  const int n = spec.coefficients.size();
  if (n < 1)
    problems.push_back("coefficient ring has no points");

  const std::vector<GroupViolation> group_problems = validate_group(spec.group);
  if (!group_problems.empty()) {
    for (const GroupViolation& v : group_problems) {
      std::ostringstream out;
      out << "group " << v.kind << ": " << v.detail;
      problems.push_back(out.str());
    }
    return problems; // the table cannot be indexed through safely
  }

  const int order = spec.group.order();
  if (static_cast<int>(spec.action.size()) != order) {
    problems.push_back("action table size differs from the group order");
    return problems;
  }
  for (int g = 0; g < order; ++g) {
    try {
      validate_permutation(spec.action[g]);
    } catch (const std::exception& e) {
      problems.push_back("action at degree " + std::to_string(g) + ": " + e.what());
      return problems;
    }
    if (spec.action[g].size() != n) {
      problems.push_back("action at degree " + std::to_string(g) +
                         " permutes the wrong number of points");
      return problems;
    }
  }
  if (!spec.action[0].is_identity())
    problems.push_back("the identity degree must act as the identity permutation");
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h)
      if (!(spec.action[op(spec.group, g, h)] == spec.action[g].then(spec.action[h]))) {
        std::ostringstream out;
        out << "action is not a homomorphism at the pair (" << g << ", " << h << ")";
        problems.push_back(out.str());
      }

  if (spec.cocycle) {
    const auto& a = *spec.cocycle;
    if (static_cast<int>(a.size()) != order) {
      problems.push_back("cocycle table has the wrong number of rows");
      return problems;
    }
    for (int g = 0; g < order; ++g) {
      if (static_cast<int>(a[g].size()) != order) {
        problems.push_back("cocycle row " + std::to_string(g) + " has the wrong length");
        return problems;
      }
      for (int h = 0; h < order; ++h) {
        if (a[g][h].size() != n) {
          problems.push_back("cocycle value at (" + std::to_string(g) + ", " +
                             std::to_string(h) + ") has the wrong dimension");
          return problems;
        }
        for (Index x = 0; x < n; ++x)
          if (a[g][h](x) == 0) {
            std::ostringstream out;
            out << "cocycle value at (" << g << ", " << h << ") vanishes at point " << x
                << " and is not invertible";
            problems.push_back(out.str());
          }
      }
    }
    for (int g = 0; g < order; ++g) {
      if (a[0][g] != ones(n) || a[g][0] != ones(n))
        problems.push_back("cocycle is not normalized at degree " + std::to_string(g));
    }
    // alpha(s,t) . alpha(st,w) = sigma_s(alpha(t,w)) . alpha(s,tw), pointwise.
    for (int s = 0; s < order; ++s)
      for (int t = 0; t < order; ++t)
        for (int w = 0; w < order; ++w) {
          const Vec lhs = a[s][t].cwiseProduct(a[op(spec.group, s, t)][w]);
          const Vec rhs = apply_automorphism(PermutationInduced{spec.action[s]}, a[t][w])
                              .cwiseProduct(a[s][op(spec.group, t, w)]);
          if (lhs != rhs) {
            std::ostringstream out;
            out << "cocycle identity fails at the triple (" << s << ", " << t << ", " << w
                << ")";
            problems.push_back(out.str());
          }
        }
  }
  return problems;
}

GradedRing build(const SkewGroupRingSpec& spec)
{
  const std::vector<std::string> problems = validate_spec(spec);
  if (!problems.empty())
    throw std::invalid_argument("build: invalid presentation: " + join(problems));

  const int order = spec.group.order();
  const int n = spec.coefficients.size();

  std::vector<std::vector<std::string>> labels(order);
  for (int g = 0; g < order; ++g) {
    labels[g].reserve(n);
    for (int x = 0; x < n; ++x)
      labels[g].push_back("d" + spec.coefficients.points[x] + "*u" + spec.group.labels[g]);
  }

  // (delta_i u_g)(delta_j u_h) = [j = p_g(i)] alpha(g, h)(i) delta_i u_{gh}.
  std::vector<std::vector<Mat>> structure(order, std::vector<Mat>(order));
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h) {
      Mat block = Mat::Zero(static_cast<Index>(n) * n, n);
      const Vec alpha = cocycle_value(spec, g, h);
      for (int i = 0; i < n; ++i) {
        const int j = spec.action[g].apply(i);
        block(static_cast<Index>(i) * n + j, i) = alpha(i);
      }
      structure[g][h] = std::move(block);
    }

  return GradedRing(spec.group, std::move(labels), std::move(structure), ones(n));
}

Vec augmentation(const SkewGroupRingSpec& spec, const Vec& flat)
{
  if (!spec.has_trivial_cocycle())
    throw std::invalid_argument("augmentation: defined for trivial cocycles only");
  const int order = spec.group.order();
  const int n = spec.coefficients.size();
  if (flat.size() != static_cast<Index>(order) * n)
    throw std::invalid_argument("augmentation: flat vector has the wrong dimension");
  Vec total = Vec::Zero(n);
  for (int g = 0; g < order; ++g)
    total += flat.segment(static_cast<Index>(g) * n, n);
  return total;
}

std::optional<CommutationWitness> find_commutation_witness(const SkewGroupRingSpec& spec)
{
  const std::vector<std::string> problems = validate_spec(spec);
  if (!problems.empty())
    throw std::invalid_argument("find_commutation_witness: invalid presentation: " +
                                join(problems));
  const int n = spec.coefficients.size();
  for (int s = 1; s < spec.group.order(); ++s) {
    // Unknown r in Q^X; equation rows indexed by (j, x):
    //   r(x) * (delta_j(p_s(x)) - delta_j(x)) = 0.
    Mat system = Mat::Zero(static_cast<Index>(n) * n, n);
    for (int j = 0; j < n; ++j)
      for (int x = 0; x < n; ++x) {
        Rational c(0);
        if (spec.action[s].apply(x) == j)
          c += 1;
        if (x == j)
          c -= 1;
        system(static_cast<Index>(j) * n + x, x) = c;
      }
    const Mat kernel = nullspace(system);
    if (kernel.rows() > 0)
      return CommutationWitness{s, Vec(kernel.row(0).transpose())};
  }
  return std::nullopt;
}

WitnessIdealReport witness_ideal(const SkewGroupRingSpec& spec, const CommutationWitness& w)
{
  const GradedRing r = build(spec);
  if (w.s <= 0 || w.s >= r.degrees())
    throw std::invalid_argument("witness_ideal: witness degree out of range");
  if (w.r_s.size() != r.dim(0) || w.r_s == Vec::Zero(r.dim(0)))
    throw std::invalid_argument("witness_ideal: witness coefficient must be nonzero in Q^X");

  WitnessIdealReport report{w, Subspace(r.total_dim()), false, false};
  const Vec generator = r.embed(0, w.r_s) - r.embed(w.s, w.r_s);
  report.ideal = ideal_closure(r, {generator});
  report.avoids_neutral = report.ideal.intersect(r.component_subspace(0)).is_zero();
  report.proper_nonzero =
      report.ideal.dim() > 0 && report.ideal.dim() < r.total_dim();
  return report;
}

MaxCommutativeVerdict verdict_max_commutative(const SkewGroupRingSpec& spec)
{
  const GradedRing r = build(spec);
  MaxCommutativeVerdict verdict;
  verdict.max_commutative = commutant_of_neutral(r) == r.component_subspace(0);
  verdict.witness = find_commutation_witness(spec);
  if (verdict.max_commutative == verdict.witness.has_value())
    throw std::logic_error("verdict_max_commutative: commutant comparison and witness "
                           "search disagree");
  verdict.rule = "the neutral component Q^X is maximal commutative iff no degree s != e "
                 "carries a nonzero r_s with r_s*sigma_s(a) = r_s*a for all a, i.e. iff "
                 "every non-identity degree acts on the points without fixed points";
  return verdict;
}

GSimpleVerdict verdict_g_simple(const SkewGroupRingSpec& spec)
{
  const std::vector<std::string> problems = validate_spec(spec);
  if (!problems.empty())
    throw std::invalid_argument("verdict_g_simple: invalid presentation: " + join(problems));
  std::vector<PermutationInduced> actions;
  for (int g = 1; g < spec.group.order(); ++g)
    actions.push_back(PermutationInduced{spec.action[g]});
  return is_g_simple(spec.coefficients, actions);
}

namespace {

/// Closure-sampling pass shared by every branch that needs it: closes the
/// two-sided ideal generated by each random nonzero element, counts full
/// closures, and hands back the first proper nonzero one (if any).
SimplicityEvidence sample_closures(const GradedRing& r, int samples, std::uint64_t seed)
{
  SimplicityEvidence ev;
  ev.kind = "closure-sampling";
  ev.samples = samples;
  ev.seed = seed;
  Rng rng(seed);
  for (int k = 0; k < samples; ++k) {
    const Vec x = rng.nonzero_vector(r.total_dim());
    const Subspace ideal = ideal_closure(r, {x});
    if (ideal.dim() == r.total_dim()) {
      ++ev.closures_full;
    } else if (!ev.proper_ideal) {
      ev.proper_ideal = ideal;
      ev.detail = "sample " + std::to_string(k) +
                  " generates a proper nonzero two-sided ideal of dimension " +
                  std::to_string(ideal.dim());
    }
  }
  return ev;
}

/// Spanning flat basis of the ideal {f u_g : supp(f) in S, g in G}.
std::vector<Vec> invariant_subset_span(const GradedRing& r, const std::set<int>& subset)
{
  std::vector<Vec> vectors;
  for (int g = 0; g < r.degrees(); ++g)
    for (int x : subset)
      vectors.push_back(r.basis_flat(g, x));
  return vectors;
}

} // namespace

SimplicityReport verdict_simple(const SkewGroupRingSpec& spec, int samples, std::uint64_t seed)
{
  if (samples < 1)
    throw std::invalid_argument("verdict_simple: need at least one sample");
  const GradedRing r = build(spec);

  SimplicityReport report;
  report.max_commutative = verdict_max_commutative(spec);
  report.g_simple = verdict_g_simple(spec);

  if (spec.has_trivial_cocycle()) {
    report.simple = report.max_commutative.max_commutative && report.g_simple.g_simple;
    report.exact = true;
    report.rule = "skew group ring over the commutative ring Q^X: simple iff the neutral "
                  "component is maximal commutative and Q^X is G-simple (iff the point "
                  "action is free and transitive)";
    if (report.simple) {
      report.evidence = sample_closures(r, samples, seed);
      if (report.evidence.proper_ideal)
        throw std::logic_error("verdict_simple: sampled a proper ideal in a ring the exact "
                               "criterion declares simple");
    } else if (!report.max_commutative.max_commutative) {
      const WitnessIdealReport wi =
          witness_ideal(spec, *report.max_commutative.witness);
      if (!wi.proper_nonzero || !wi.avoids_neutral)
        throw std::logic_error("verdict_simple: witness ideal failed its exact checks");
      report.evidence.kind = "explicit-ideal";
      report.evidence.proper_ideal = wi.ideal;
      report.evidence.detail =
          "the two-sided ideal generated by r_s(u_e - u_s) at degree s = " +
          std::to_string(wi.witness.s) + " is proper, nonzero, and meets the neutral "
          "component trivially";
    } else {
      const auto* subset = std::get_if<SubsetIdeal>(&*report.g_simple.witness);
      if (subset == nullptr)
        throw std::logic_error("verdict_simple: expected a subset witness for Q^X");
      const std::vector<Vec> span_vectors = invariant_subset_span(r, subset->subset);
      const Subspace ideal = Subspace::span(r.total_dim(), span_vectors);
      if (ideal_closure(r, span_vectors) != ideal || ideal.is_zero() ||
          ideal.dim() == r.total_dim())
        throw std::logic_error("verdict_simple: invariant-subset ideal failed its checks");
      report.evidence.kind = "explicit-ideal";
      report.evidence.proper_ideal = ideal;
      report.evidence.detail = "functions supported on an invariant proper subset, in "
                               "every degree, form a proper nonzero two-sided ideal";
    }
    return report;
  }

  // Twisted instances: the skew criterion above is not available.
  if (spec.coefficients.size() == 1 && spec.group.order() == 2) {
    const Rational c = (*spec.cocycle)[1][1](0);
    Rational root(0);
    if (!is_rational_square(c, root)) {
      report.simple = true;
      report.exact = true;
      report.rule = "one-point Z_2 twist by a non-square scalar: the ring is the field "
                    "Q(sqrt(c)), hence simple";
      report.evidence = sample_closures(r, samples, seed);
      if (report.evidence.proper_ideal)
        throw std::logic_error("verdict_simple: sampled a proper ideal in a quadratic "
                               "field extension");
    } else {
      report.simple = false;
      report.exact = true;
      report.rule = "one-point Z_2 twist by a perfect square splits as a product of two "
                    "lines, hence is not simple";
      const Vec generator = r.unity_flat() - (Rational(1) / root) * r.basis_flat(1, 0);
      const Subspace ideal = ideal_closure(r, {generator});
      if (ideal.dim() != 1)
        throw std::logic_error("verdict_simple: split-twist ideal is not a line");
      report.evidence.kind = "explicit-ideal";
      report.evidence.proper_ideal = ideal;
      report.evidence.detail = "the idempotent direction 1 - u_1/sqrt(c) spans a "
                               "one-dimensional two-sided ideal";
    }
    return report;
  }

  report.evidence = sample_closures(r, samples, seed);
  if (report.evidence.proper_ideal) {
    report.simple = false;
    report.exact = true; // the sampled proper ideal is an exact counterexample
    report.rule = "twisted instance: a sampled element generated a proper nonzero "
                  "two-sided ideal";
  } else {
    report.simple = true;
    report.exact = false;
    report.rule = "twisted instance, sampling only: every sampled element generated the "
                  "whole ring; verdict not certified";
  }
  return report;
}

} // namespace grw
