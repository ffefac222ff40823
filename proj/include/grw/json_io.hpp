#ifndef GRW_JSON_IO_HPP
#define GRW_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "grw/dynsys.hpp"
#include "grw/graded.hpp"
#include "grw/skew.hpp"

namespace grw {

using Json = nlohmann::ordered_json;

/*
 * Instance documents.  Every document carries a "kind":
 *
 *  graded: { "kind": "graded", "group": GROUP, "labels": [[str...]...],
 *            "structure": [{"g","h","i","j","coeffs":[RAT...]}...],
 *            "unity": [RAT...] }
 *  skew:   { "kind": "skew", "points": [str...], "group": GROUP,
 *            "action": [{"perm":[int...]}...], "cocycle": [[[RAT...]...]...]? }
 *  dynsys: { "kind": "dynsys", "points": [str...], "map": [int...] }
 *
 *  GROUP:  {"kind":"cyclic","n":int}
 *        | {"kind":"product","factors":[GROUP...]}
 *        | {"kind":"table","table":[[int...]...],"labels":[str...]?}
 *
 * Rationals (RAT) are written as "p/q" strings, always with an explicit
 * denominator; integers are accepted on input.  Malformed input raises
 * std::invalid_argument naming the offending path.
 */

Json rational_json(const Rational& r);
Rational rational_from(const Json& j, const std::string& path);
Json vec_json(const Vec& v);
Vec vec_from(const Json& j, const std::string& path);
Json poly_json(const Poly& p);
Poly poly_from(const Json& j, const std::string& path);

Json cyclic_group_json(int n);
Json product_group_json(std::vector<Json> factors);
FiniteGroup group_from(const Json& j, const std::string& path);

/// A parsed instance: the kind tag, the materialized object, and the original
/// document (kept for byte-stable echoing into reports).
struct ParsedInstance {
  std::string kind;
  std::optional<GradedRing> graded;       // set for kind "graded" and "skew"
  std::optional<SkewGroupRingSpec> skew;  // set for kind "skew"
  std::optional<FiniteDynSystem> dynsys;  // set for kind "dynsys"
  Json echo;
};

ParsedInstance instance_from(const Json& doc);

/// Serializers (the group document is supplied by the caller, since a Cayley
/// table does not remember how it was constructed).
Json graded_json(const GradedRing& r, const Json& group_doc);
Json skew_json(const SkewGroupRingSpec& spec, const Json& group_doc);
Json dynsys_json(const FiniteDynSystem& sys);

/// One named verification outcome inside a report.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

bool checks_pass(const std::vector<Check>& checks);

/**
 * Assembles the standard report envelope: schema "1", tool version, command
 * name, the echoed instance (null when there is none), the run parameters,
 * the checks sorted by name, and command-specific data.  Serialization is
 * deterministic: fixed key order, canonical rational strings, and no
 * timestamps, so identical runs emit identical bytes.
 */
Json report_json(const std::string& command, const Json* instance_echo,
                 const Json& parameters, std::vector<Check> checks, const Json& data);

} // namespace grw

#endif
