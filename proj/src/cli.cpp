#include "grw/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <sstream>

#include "grw/crystalline.hpp"
#include "grw/dynsys.hpp"
#include "grw/gallery.hpp"
#include "grw/graded.hpp"
#include "grw/json_io.hpp"
#include "grw/rng.hpp"
#include "grw/skew.hpp"

namespace grw {

namespace {

struct Options {
  std::string input;
  std::string name;
  int samples = 25;
  std::uint64_t seed = 1;
  int bound = 4;
  int n = 4;
  int indent = 2;
};

Json load_doc(const std::string& path)
{
  if (path == "-")
    return Json::parse(std::cin);
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open input file '" + path + "'");
  return Json::parse(in);
}

const GradedRing& require_graded(const ParsedInstance& inst, const std::string& command)
{
  if (!inst.graded)
    throw std::invalid_argument("the '" + command +
                                "' command needs a graded or skew instance, got kind '" +
                                inst.kind + "'");
  return *inst.graded;
}

const FiniteDynSystem& require_dynsys(const ParsedInstance& inst, const std::string& command)
{
  if (!inst.dynsys)
    throw std::invalid_argument("the '" + command +
                                "' command needs a dynsys instance, got kind '" +
                                inst.kind + "'");
  return *inst.dynsys;
}

int finish(std::ostream& out, const Json& report, int indent)
{
  out << report.dump(indent) << '\n';
  return report.at("pass").get<bool>() ? 0 : 1;
}

Json subspace_json(const Subspace& s)
{
  Json basis = Json::array();
  for (Index i = 0; i < s.dim(); ++i)
    basis.push_back(vec_json(s.basis_vector(i)));
  return Json{{"ambient", s.ambient()}, {"dim", s.dim()}, {"basis", basis}};
}

Json ideal_descriptor_json(const IdealDescriptor& d)
{
  if (const auto* subset = std::get_if<SubsetIdeal>(&d)) {
    Json points = Json::array();
    for (int x : subset->subset)
      points.push_back(x);
    return Json{{"kind", "subset"}, {"subset", points}};
  }
  const auto& principal = std::get<PrincipalIdeal>(d);
  return Json{{"kind", "principal"}, {"generator", principal.generator.to_string()}};
}

Json g_simple_json(const GSimpleVerdict& v)
{
  Json out{{"g_simple", v.g_simple}, {"justification", v.justification}};
  out["witness"] = v.witness ? ideal_descriptor_json(*v.witness) : Json(nullptr);
  return out;
}

Json crossed_element_json(const CrossedElement& a)
{
  Json terms = Json::array();
  for (const auto& [degree, coeff] : a)
    terms.push_back(Json{{"degree", degree}, {"coeff", vec_json(coeff)}});
  return terms;
}

int run_validate(const Options& opt, std::ostream& out)
{
  const ParsedInstance inst = instance_from(load_doc(opt.input));
  std::vector<Check> checks;
  Json data = Json::object();
  if (inst.kind == "dynsys") {
    checks.push_back({"system-valid", true, "validated while parsing"});
    data["points"] = inst.dynsys->space.size();
    data["map_order"] = order_of_map(*inst.dynsys);
  } else {
    const GradedRing& r = *inst.graded;
    const auto violations = validate_graded(r);
    Json vlist = Json::array();
    std::map<std::string, std::pair<int, std::string>> by_kind;
    for (const auto& v : violations) {
      Json at = Json::array();
      for (int x : v.at)
        at.push_back(x);
      vlist.push_back(Json{{"kind", v.kind}, {"at", at}, {"detail", v.detail}});
      auto& slot = by_kind[v.kind];
      if (slot.first++ == 0)
        slot.second = v.detail;
    }
    for (const std::string kind : {"shape", "unity", "associativity"}) {
      const auto it = by_kind.find(kind);
      const bool ok = it == by_kind.end();
      std::string detail;
      if (!ok)
        detail = it->second.second +
                 (it->second.first > 1
                      ? " (and " + std::to_string(it->second.first - 1) + " more)"
                      : "");
      checks.push_back({"no-" + kind + "-violations", ok, detail});
    }
    if (inst.kind == "skew")
      checks.push_back({"skew-presentation-valid", true, "validated while parsing"});
    data["violations"] = vlist;
    data["total_dim"] = r.total_dim();
    data["degrees"] = r.degrees();
  }
  return finish(out,
                report_json("validate", &inst.echo, Json{{"input", opt.input}}, checks,
                            data),
                opt.indent);
}

int run_strong(const Options& opt, std::ostream& out)
{
  const ParsedInstance inst = instance_from(load_doc(opt.input));
  const GradedRing& r = require_graded(inst, "strong");
  const StrongGradationCertificate cert = is_strongly_graded(r);

  std::vector<Check> checks;
  std::string fail_detail;
  for (const auto& [g, h] : cert.failures)
    fail_detail += (fail_detail.empty() ? "short pairs: " : ", ") + std::string("(") +
                   std::to_string(g) + "," + std::to_string(h) + ")";
  checks.push_back({"strongly-graded", cert.strongly_graded, fail_detail});

  Json data = Json::object();
  Json ranks = Json::array(), required = Json::array();
  for (int g = 0; g < r.degrees(); ++g) {
    Json rrow = Json::array(), qrow = Json::array();
    for (int h = 0; h < r.degrees(); ++h) {
      rrow.push_back(cert.ranks[g][h]);
      qrow.push_back(cert.required[g][h]);
    }
    ranks.push_back(std::move(rrow));
    required.push_back(std::move(qrow));
  }
  data["product_span_dims"] = ranks;
  data["component_dims"] = required;

  if (cert.strongly_graded) {
    int verified = 0;
    Json parts = Json::array();
    for (int g = 0; g < r.degrees(); ++g) {
      const PartitionOfUnity p = partition_of_unity(r, g);
      const bool ok = verify_partition(r, p);
      verified += ok ? 1 : 0;
      parts.push_back(Json{{"degree", g},
                           {"pairs", p.pairs.size()},
                           {"verified", ok}});
    }
    checks.push_back({"partitions-of-unity-verified", verified == r.degrees(),
                      std::to_string(verified) + "/" + std::to_string(r.degrees()) +
                          " degrees"});
    data["partitions"] = parts;
  }
  return finish(out,
                report_json("strong", &inst.echo, Json{{"input", opt.input}}, checks,
                            data),
                opt.indent);
}

int run_commutant(const Options& opt, std::ostream& out)
{
  const ParsedInstance inst = instance_from(load_doc(opt.input));
  const GradedRing& r = require_graded(inst, "commutant");

  const Subspace cn = commutant_of_neutral(r);
  const Subspace zn = center_of_neutral(r);
  const Subspace czn = commutant_of_center_of_neutral(r);
  const Subspace z = center(r);
  const Subspace neutral = r.component_subspace(0);

  std::vector<Check> checks;
  checks.push_back({"center-inside-commutant-of-neutral", cn.contains(z), ""});
  checks.push_back(
      {"commutant-of-neutral-inside-commutant-of-its-center", czn.contains(cn), ""});
  checks.push_back({"neutral-inside-commutant-of-its-center", czn.contains(neutral), ""});
  checks.push_back({"center-of-neutral-inside-neutral", neutral.contains(zn), ""});

  Json data = Json::object();
  data["commutant_of_neutral"] = subspace_json(cn);
  data["center_of_neutral"] = subspace_json(zn);
  data["commutant_of_center_of_neutral"] = subspace_json(czn);
  data["center"] = subspace_json(z);
  return finish(out,
                report_json("commutant", &inst.echo, Json{{"input", opt.input}}, checks,
                            data),
                opt.indent);
}

int run_action(const Options& opt, std::ostream& out)
{
  const ParsedInstance inst = instance_from(load_doc(opt.input));
  const GradedRing& r = require_graded(inst, "action");

  std::vector<Check> checks;
  Json data = Json::object();
  const StrongGradationCertificate cert = is_strongly_graded(r);
  checks.push_back({"strongly-graded", cert.strongly_graded,
                    cert.strongly_graded ? "" : "the canonical action needs a strong gradation"});
  if (cert.strongly_graded) {
    const CanonicalActionReport rep = verify_canonical_action_properties(r);
    checks.push_back({"action-intertwines", rep.intertwines, ""});
    checks.push_back({"action-is-group-action", rep.is_group_action, ""});
    checks.push_back(
        {"action-preserves-center-of-neutral", rep.preserves_center_of_neutral, ""});
    checks.push_back(
        {"action-certificate-independent", rep.certificate_independent, ""});
    checks.push_back({"action-fixed-points-are-center", rep.fixed_points_are_center, ""});
    Json failures = Json::array();
    for (const std::string& f : rep.failures)
      failures.push_back(f);
    data["failures"] = failures;
    data["commutant_of_neutral_dim"] = commutant_of_neutral(r).dim();
    data["center_dim"] = center(r).dim();
  }
  return finish(out,
                report_json("action", &inst.echo, Json{{"input", opt.input}}, checks,
                            data),
                opt.indent);
}

int run_ideals(const Options& opt, std::ostream& out)
{
  const ParsedInstance inst = instance_from(load_doc(opt.input));
  const GradedRing& r = require_graded(inst, "ideals");
  if (opt.samples < 1)
    throw std::invalid_argument("--samples must be positive");

  const Subspace czn = commutant_of_center_of_neutral(r);
  Rng rng(opt.seed);
  int meets = 0, proper = 0;
  for (int s = 0; s < opt.samples; ++s) {
    const Vec gen = rng.nonzero_vector(r.total_dim());
    const Subspace ideal = ideal_closure(r, {gen});
    if (!intersect_ideal_with(ideal, czn).is_zero())
      ++meets;
    if (ideal.dim() < r.total_dim())
      ++proper;
  }
  std::vector<Check> checks;
  checks.push_back({"ideals-meet-commutant-of-neutral-center", meets == opt.samples,
                    std::to_string(meets) + "/" + std::to_string(opt.samples) +
                        " closures intersect it nontrivially"});
  const AnnihilatorReport ann = annihilator_check(r, opt.samples, opt.seed);
  checks.push_back({"no-component-annihilator", ann.pass(),
                    ann.pass() ? "" : ann.failure_detail.front()});

  Json data = Json::object();
  data["proper_closures"] = proper;
  data["full_closures"] = opt.samples - proper;
  data["commutant_of_center_dim"] = czn.dim();
  return finish(out,
                report_json("ideals", &inst.echo,
                            Json{{"input", opt.input},
                                 {"samples", opt.samples},
                                 {"seed", opt.seed}},
                            checks, data),
                opt.indent);
}

Json skew_simplicity_data(const SimplicityReport& rep)
{
  Json mc{{"max_commutative", rep.max_commutative.max_commutative},
          {"rule", rep.max_commutative.rule}};
  if (rep.max_commutative.witness)
    mc["witness"] = Json{{"degree", rep.max_commutative.witness->s},
                         {"coeff", vec_json(rep.max_commutative.witness->r_s)}};
  else
    mc["witness"] = nullptr;
  Json evidence{{"kind", rep.evidence.kind},
                {"samples", rep.evidence.samples},
                {"seed", rep.evidence.seed},
                {"closures_full", rep.evidence.closures_full},
                {"detail", rep.evidence.detail}};
  evidence["proper_ideal_dim"] =
      rep.evidence.proper_ideal ? Json(rep.evidence.proper_ideal->dim()) : Json(nullptr);
  return Json{{"simple", rep.simple},
              {"exact", rep.exact},
              {"rule", rep.rule},
              {"max_commutative", mc},
              {"g_simple", g_simple_json(rep.g_simple)},
              {"evidence", evidence}};
}

void append_skew_simplicity_checks(const SkewGroupRingSpec& spec,
                                   const SimplicityReport& rep,
                                   std::vector<Check>& checks)
{
  checks.push_back({"witness-machinery-consistent",
                    rep.max_commutative.witness.has_value() !=
                        rep.max_commutative.max_commutative,
                    "a commutation witness exists exactly when R_e is not maximal "
                    "commutative"});
  if (spec.has_trivial_cocycle())
    checks.push_back({"criterion-cross-check",
                      rep.simple == (rep.max_commutative.max_commutative &&
                                     rep.g_simple.g_simple),
                      "simple iff maximal commutative and G-simple coefficients"});
  if (rep.evidence.proper_ideal) {
    const GradedRing r = build(spec);
    const Subspace& ideal = *rep.evidence.proper_ideal;
    std::vector<Vec> gens;
    for (Index i = 0; i < ideal.dim(); ++i)
      gens.push_back(ideal.basis_vector(i));
    const bool closed = ideal_closure(r, gens) == ideal;
    const bool proper = !ideal.is_zero() && ideal.dim() < r.total_dim();
    checks.push_back({"proper-ideal-verified", closed && proper,
                      closed ? "closure-stable and proper" : "closure escapes the span"});
  } else if (rep.evidence.kind == "closure-sampling") {
    checks.push_back({"closures-all-full",
                      rep.evidence.closures_full == rep.evidence.samples,
                      std::to_string(rep.evidence.closures_full) + "/" +
                          std::to_string(rep.evidence.samples)});
  }
}

void append_dynsys_checks(const FiniteDynSystem& sys, const DynSysVerdicts& v,
                          std::vector<Check>& checks)
{
  checks.push_back({"minimality-matches-coefficient-simplicity",
                    v.minimal_matches_z_simple,
                    "minimal iff the coefficients admit no invariant ideal"});
  bool witness_ok = false;
  std::string witness_detail = "missing";
  if (v.commutant_witness) {
    const CommutantMembershipReport m = commutant_membership(sys, *v.commutant_witness);
    const bool positive_degree =
        !v.commutant_witness->empty() && v.commutant_witness->begin()->first != 0;
    witness_ok = m.member && positive_degree;
    witness_detail = witness_ok
                         ? "commutes with every function and lives in a nonzero degree"
                         : "claimed witness fails membership";
  }
  checks.push_back({"commutant-witness-verified", witness_ok, witness_detail});
  checks.push_back({"never-simple-reason-stated", !v.simple_reason.empty(),
                    v.simple_reason});
}

Json dynsys_verdicts_json(const FiniteDynSystem& sys, const DynSysVerdicts& v)
{
  Json data{{"minimal", v.minimal},
            {"map_order", order_of_map(sys)},
            {"z_simple", g_simple_json(v.z_simple)},
            {"top_free", v.top_free},
            {"top_free_reason", v.top_free_reason},
            {"max_commutative", v.max_commutative},
            {"simple", v.simple},
            {"simple_reason", v.simple_reason}};
  data["commutant_witness"] =
      v.commutant_witness ? crossed_element_json(*v.commutant_witness) : Json(nullptr);
  return data;
}

int run_simplicity(const Options& opt, std::ostream& out)
{
  const ParsedInstance inst = instance_from(load_doc(opt.input));
  if (opt.samples < 1)
    throw std::invalid_argument("--samples must be positive");
  std::vector<Check> checks;
  Json data = Json::object();

  if (inst.kind == "skew") {
    const SimplicityReport rep = verdict_simple(*inst.skew, opt.samples, opt.seed);
    append_skew_simplicity_checks(*inst.skew, rep, checks);
    data = skew_simplicity_data(rep);
  } else if (inst.kind == "dynsys") {
    const DynSysVerdicts v = dynsys_verdicts(*inst.dynsys);
    append_dynsys_checks(*inst.dynsys, v, checks);
    data = dynsys_verdicts_json(*inst.dynsys, v);
  } else {
    const GradedRing& r = *inst.graded;
    Rng rng(opt.seed);
    std::optional<Subspace> proper;
    int full = 0;
    for (int s = 0; s < opt.samples && !proper; ++s) {
      const Subspace ideal = ideal_closure(r, {rng.nonzero_vector(r.total_dim())});
      if (ideal.dim() == r.total_dim())
        ++full;
      else
        proper = ideal;
    }
    const bool simple = !proper.has_value();
    data["simple"] = simple;
    data["exact"] = proper.has_value();
    data["rule"] = proper ? "a random element generated a proper nonzero two-sided ideal"
                          : "every sampled closure was the whole ring; sampling only, "
                            "not a proof of simplicity";
    data["closures_full"] = full;
    if (proper) {
      std::vector<Vec> gens;
      for (Index i = 0; i < proper->dim(); ++i)
        gens.push_back(proper->basis_vector(i));
      checks.push_back({"proper-ideal-verified",
                        ideal_closure(r, gens) == *proper && !proper->is_zero(),
                        "dim " + std::to_string(proper->dim()) + " of " +
                            std::to_string(r.total_dim())});
      data["proper_ideal"] = subspace_json(*proper);
    } else {
      checks.push_back({"sampling-complete", full == opt.samples,
                        std::to_string(full) + "/" + std::to_string(opt.samples)});
    }
  }
  return finish(out,
                report_json("simplicity", &inst.echo,
                            Json{{"input", opt.input},
                                 {"samples", opt.samples},
                                 {"seed", opt.seed}},
                            checks, data),
                opt.indent);
}

int run_weyl(const Options& opt, std::ostream& out)
{
  if (opt.bound < 1)
    throw std::invalid_argument("--bound must be positive");
  std::vector<Check> checks;

  const CrystallineCheckReport ax = check_crystalline_axioms(
      [](int m, int n) { return weyl_alpha(m, n); }, opt.bound);
  checks.push_back({"product-match", ax.product_match, ""});
  checks.push_back({"intertwining", ax.intertwining, ""});
  checks.push_back({"cocycle-identity", ax.cocycle_identity, ""});
  checks.push_back({"normalization", ax.normalization, ""});
  checks.push_back({"values-nonzero", ax.values_nonzero, ""});
  checks.push_back({"inverse-symmetry", ax.inverse_symmetry, ""});

  const WeylCommutantReport wc = weyl_bounded_commutant_of_z(opt.bound);
  checks.push_back({"window-commutant-is-z-polynomials", wc.equals_z_polynomials,
                    "dim " + std::to_string(wc.commutant_dim) + " inside a window of dim " +
                        std::to_string(wc.window_dim)});

  const WeylGSimplicityReport gs = weyl_g_simplicity_report(opt.bound, true);
  checks.push_back({"coefficients-g-simple", gs.coefficients_g_simple.g_simple,
                    gs.coefficients_g_simple.justification});
  checks.push_back({"neutral-ideal-witness",
                    gs.neutral_witness_proper && gs.neutral_witness_escapes,
                    "(z) is proper and moved by some shift"});

  Json data = Json::object();
  Json alpha = Json::array();
  const int window = std::min(opt.bound, 3);
  for (int m = -window; m <= window; ++m)
    for (int n = -window; n <= window; ++n)
      alpha.push_back(Json{{"m", m}, {"n", n}, {"alpha", weyl_alpha(m, n).to_string()}});
  data["alpha_table"] = alpha;
  data["commutant"] = Json{{"window_dim", wc.window_dim},
                           {"commutant_dim", wc.commutant_dim},
                           {"expected_dim", wc.expected_dim}};
  data["conclusion"] = gs.conclusion;
  Json failures = Json::array();
  for (const std::string& f : ax.failures)
    failures.push_back(f);
  data["axiom_failures"] = failures;
  return finish(out,
                report_json("weyl", nullptr, Json{{"bound", opt.bound}}, checks, data),
                opt.indent);
}

int run_dynsys(const Options& opt, std::ostream& out)
{
  const ParsedInstance inst = instance_from(load_doc(opt.input));
  const FiniteDynSystem& sys = require_dynsys(inst, "dynsys");
  if (opt.samples < 1)
    throw std::invalid_argument("--samples must be positive");
  if (opt.bound < 0)
    throw std::invalid_argument("--bound must be nonnegative");

  const DynSysVerdicts v = dynsys_verdicts(sys);
  std::vector<Check> checks;
  append_dynsys_checks(sys, v, checks);
  Json data = dynsys_verdicts_json(sys, v);

  Json orbit_list = Json::array();
  for (const auto& orbit : orbits(sys.space.size(), {sys.h})) {
    Json o = Json::array();
    for (int x : orbit)
      o.push_back(x);
    orbit_list.push_back(std::move(o));
  }
  data["orbits"] = orbit_list;

  if (v.minimal) {
    const PiReport pi = verify_pi(sys, opt.bound, opt.samples, opt.seed);
    checks.push_back({"representation-homomorphism", pi.homomorphism_on_samples, ""});
    checks.push_back({"shift-power-is-t", pi.shift_power_is_t, ""});
    checks.push_back({"representation-injective-on-window", pi.injective_on_window,
                      "rank " + std::to_string(pi.image_rank) + " of " +
                          std::to_string(pi.domain_dim)});
    checks.push_back({"representation-window-surjective", pi.window_surjective,
                      "target window dim " + std::to_string(pi.window_dim)});
    checks.push_back({"unit-ideal-escape", pi.unit_ideal_escape,
                      "u_p - 1 maps to a proper nonzero ideal of the image"});
    Json failures = Json::array();
    for (const std::string& f : pi.failures)
      failures.push_back(f);
    data["representation"] = Json{{"p", pi.p},
                                  {"degree_window", pi.degree_window},
                                  {"domain_dim", pi.domain_dim},
                                  {"image_rank", pi.image_rank},
                                  {"window_dim", pi.window_dim},
                                  {"failures", failures}};
  } else {
    data["representation"] = "skipped: the system is not minimal";
  }
  return finish(out,
                report_json("dynsys", &inst.echo,
                            Json{{"input", opt.input},
                                 {"bound", opt.bound},
                                 {"samples", opt.samples},
                                 {"seed", opt.seed}},
                            checks, data),
                opt.indent);
}

int run_gallery(const Options& opt, std::ostream& out)
{
  if (opt.name.empty()) {
    Json list = Json::array();
    list.push_back(Json{{"name", "m3-z2"}, {"kind", "graded"}, {"takes_n", false}});
    list.push_back(Json{{"name", "gauss-z2"}, {"kind", "skew"}, {"takes_n", false}});
    list.push_back(Json{{"name", "laurent"}, {"kind", "skew"}, {"takes_n", true}});
    list.push_back(Json{{"name", "free-2pt"}, {"kind", "skew"}, {"takes_n", false}});
    list.push_back(Json{{"name", "single-orbit"}, {"kind", "dynsys"}, {"takes_n", true}});
    const Json report = report_json("gallery", nullptr, Json::object(), {},
                                    Json{{"instances", list}});
    return finish(out, report, opt.indent);
  }
  Json doc;
  if (opt.name == "m3-z2")
    doc = graded_json(m3_z2(), cyclic_group_json(2));
  else if (opt.name == "gauss-z2")
    doc = skew_json(gauss_z2_spec(), cyclic_group_json(2));
  else if (opt.name == "laurent")
    doc = skew_json(laurent_group_ring_spec(opt.n), cyclic_group_json(opt.n));
  else if (opt.name == "free-2pt")
    doc = skew_json(free_two_point_spec(), cyclic_group_json(2));
  else if (opt.name == "single-orbit")
    doc = dynsys_json(single_orbit(opt.n));
  else
    throw std::invalid_argument("unknown gallery instance '" + opt.name +
                                "'; run the gallery command without a name for the list");
  out << doc.dump(opt.indent) << '\n';
  return 0;
}

} // namespace

int run(const std::vector<std::string>& argv, std::ostream& out)
{
  CLI::App app{"exact workbench for group-graded rings"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--json-indent", opt.indent, "indentation of the JSON output")
      ->capture_default_str();

  const auto with_input = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("--input", opt.input, "instance document (JSON file, or - for stdin)")
        ->required();
    return sub;
  };
  const auto with_sampling = [&](CLI::App* sub) {
    sub->add_option("--samples", opt.samples, "number of random trials")
        ->capture_default_str();
    sub->add_option("--seed", opt.seed, "random seed")->capture_default_str();
    return sub;
  };

  CLI::App* validate_cmd = with_input(
      app.add_subcommand("validate", "check a presentation against the ring axioms"));
  CLI::App* strong_cmd = with_input(app.add_subcommand(
      "strong", "decide strong gradation and verify partitions of unity"));
  CLI::App* commutant_cmd = with_input(app.add_subcommand(
      "commutant", "commutants and centers attached to the neutral component"));
  CLI::App* action_cmd = with_input(app.add_subcommand(
      "action", "verify the canonical action on the commutant of the neutral component"));
  CLI::App* ideals_cmd = with_sampling(with_input(app.add_subcommand(
      "ideals", "random two-sided ideals against the intersection theorem")));
  CLI::App* simplicity_cmd = with_sampling(with_input(
      app.add_subcommand("simplicity", "simplicity verdict with verified evidence")));
  CLI::App* weyl_cmd =
      app.add_subcommand("weyl", "first Weyl algebra as a crystalline graded ring");
  weyl_cmd->fallthrough();
  weyl_cmd->add_option("--bound", opt.bound, "degree window")->capture_default_str();
  CLI::App* dynsys_cmd = with_sampling(with_input(app.add_subcommand(
      "dynsys", "crossed-product verdicts and the Laurent matrix representation")));
  dynsys_cmd->add_option("--bound", opt.bound, "representation degree window")
      ->capture_default_str();
  CLI::App* gallery_cmd =
      app.add_subcommand("gallery", "list built-in instances or emit one as JSON");
  gallery_cmd->fallthrough();
  gallery_cmd->add_option("name", opt.name, "instance to emit");
  gallery_cmd->add_option("--n", opt.n, "size parameter where applicable")
      ->capture_default_str();

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, out);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, out);
  } catch (const CLI::ParseError& e) {
    out << Json{{"error", e.what()}}.dump(opt.indent) << '\n';
    return 2;
  }

  try {
    if (validate_cmd->parsed())
      return run_validate(opt, out);
    if (strong_cmd->parsed())
      return run_strong(opt, out);
    if (commutant_cmd->parsed())
      return run_commutant(opt, out);
    if (action_cmd->parsed())
      return run_action(opt, out);
    if (ideals_cmd->parsed())
      return run_ideals(opt, out);
    if (simplicity_cmd->parsed())
      return run_simplicity(opt, out);
    if (weyl_cmd->parsed())
      return run_weyl(opt, out);
    if (dynsys_cmd->parsed())
      return run_dynsys(opt, out);
    if (gallery_cmd->parsed())
      return run_gallery(opt, out);
    throw std::logic_error("no subcommand dispatched");
  } catch (const Json::parse_error& e) {
    out << Json{{"error", std::string("input is not valid JSON: ") + e.what()}}
               .dump(opt.indent)
        << '\n';
    return 2;
  } catch (const std::exception& e) {
    out << Json{{"error", e.what()}}.dump(opt.indent) << '\n';
    return 2;
  }
}

} // namespace grw
