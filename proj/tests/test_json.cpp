#include <catch2/catch_amalgamated.hpp>

#include "grw/dynsys.hpp"
#include "grw/gallery.hpp"
#include "grw/json_io.hpp"
#include "grw/skew.hpp"

using namespace grw;

namespace {

bool same_ring(const GradedRing& a, const GradedRing& b)
{
  if (a.degrees() != b.degrees())
    return false;
  for (int g = 0; g < a.degrees(); ++g)
    if (a.dim(g) != b.dim(g) || a.labels(g) != b.labels(g))
      return false;
  if (a.unity() != b.unity())
    return false;
  for (int g = 0; g < a.degrees(); ++g)
    for (int h = 0; h < a.degrees(); ++h)
      for (int i = 0; i < a.dim(g); ++i)
        for (int j = 0; j < a.dim(h); ++j)
          if (a.structure_row(g, i, h, j) != b.structure_row(g, i, h, j))
            return false;
  return true;
}

SkewGroupRingSpec swap_spec()
{
  SkewGroupRingSpec spec;
  spec.coefficients.points = {"x", "y"};
  spec.group = make_cyclic(2);
  spec.action = {Permutation::identity(2), Permutation{{1, 0}}};
  return spec;
}

} // namespace

TEST_CASE("rationals serialize as p/q strings and parse both forms", "[json]")
{
  CHECK(rational_json(frac(-3, 4)).get<std::string>() == "-3/4");
  CHECK(rational_json(Rational(5)).get<std::string>() == "5/1");
  CHECK(rational_from(Json("5/2"), "$") == frac(5, 2));
  CHECK(rational_from(Json(7), "$") == Rational(7));
  CHECK(rational_from(Json("-3/1"), "$") == Rational(-3));

  SECTION("malformed rationals report the offending path")
  {
    for (const Json bad : {Json("abc"), Json("1/0"), Json(1.5), Json(true)}) {
      try {
        rational_from(bad, "$.unity[2]");
        FAIL("expected invalid_argument");
      } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("$.unity[2]") != std::string::npos);
      }
    }
  }
}

TEST_CASE("vectors and polynomials round-trip", "[json]")
{
  Vec v(3);
  v << frac(1, 2), Rational(0), Rational(-4);
  CHECK(vec_from(vec_json(v), "$") == v);

  const Poly p({Rational(2), frac(-1, 3), Rational(0), Rational(5)});
  CHECK(poly_from(poly_json(p), "$") == p);
  CHECK(poly_from(poly_json(Poly::zero()), "$") == Poly::zero());
}

TEST_CASE("group documents cover cyclic, product, and raw tables", "[json]")
{
  const FiniteGroup c3 = group_from(cyclic_group_json(3), "$");
  CHECK(c3.table == make_cyclic(3).table);

  const FiniteGroup klein =
      group_from(product_group_json({cyclic_group_json(2), cyclic_group_json(2)}), "$");
  CHECK(klein.table == direct_product(make_cyclic(2), make_cyclic(2)).table);

  SECTION("explicit tables validate")
  {
    const Json doc{{"kind", "table"}, {"table", Json::array({{0, 1}, {1, 0}})}};
    const FiniteGroup g = group_from(doc, "$");
    CHECK(g.table == make_cyclic(2).table);
    CHECK(g.labels == std::vector<std::string>{"0", "1"});
  }

  SECTION("a non-group table is rejected with its path")
  {
    const Json doc{{"kind", "table"}, {"table", Json::array({{0, 1}, {0, 1}})}};
    try {
      group_from(doc, "$.group");
      FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
      const std::string msg = e.what();
      CHECK(msg.find("$.group.table") != std::string::npos);
      CHECK(msg.find("not a group table") != std::string::npos);
    }
  }

  SECTION("unknown kinds are rejected")
  {
    CHECK_THROWS_AS(group_from(Json{{"kind", "free"}}, "$"), std::invalid_argument);
    CHECK_THROWS_AS(group_from(Json{{"kind", "cyclic"}, {"n", 0}}, "$"),
                    std::invalid_argument);
  }
}

TEST_CASE("graded instances round-trip through their documents", "[json]")
{
  const GradedRing r = m3_z2();
  const Json doc = graded_json(r, cyclic_group_json(2));
  const ParsedInstance parsed = instance_from(doc);
  REQUIRE(parsed.kind == "graded");
  REQUIRE(parsed.graded.has_value());
  CHECK(same_ring(*parsed.graded, r));
  CHECK(parsed.echo == doc);

  SECTION("the round-trip is a fixed point of serialization")
  {
    CHECK(graded_json(*parsed.graded, cyclic_group_json(2)) == doc);
  }

  SECTION("duplicate structure entries are rejected")
  {
    Json broken = doc;
    broken["structure"].push_back(broken["structure"][0]);
    try {
      instance_from(broken);
      FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
    }
  }

  SECTION("a unity of the wrong length is rejected with its path")
  {
    Json broken = doc;
    broken["unity"] = Json::array({"1/1"});
    try {
      instance_from(broken);
      FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("$.unity") != std::string::npos);
    }
  }
}

TEST_CASE("skew instances round-trip and build their graded ring", "[json]")
{
  SkewGroupRingSpec spec = swap_spec();
  const Json doc = skew_json(spec, cyclic_group_json(2));
  const ParsedInstance parsed = instance_from(doc);
  REQUIRE(parsed.kind == "skew");
  REQUIRE(parsed.skew.has_value());
  REQUIRE(parsed.graded.has_value());
  CHECK(parsed.skew->coefficients.points == spec.coefficients.points);
  CHECK(parsed.skew->action[1] == spec.action[1]);
  CHECK(same_ring(*parsed.graded, build(spec)));
  CHECK(skew_json(*parsed.skew, cyclic_group_json(2)) == doc);

  SECTION("cocycles survive the round-trip")
  {
    Vec ones = Vec::Ones(2), twisted(2);
    twisted << Rational(-1), Rational(-1);
    spec.cocycle = {{ones, ones}, {ones, twisted}};
    const Json tdoc = skew_json(spec, cyclic_group_json(2));
    const ParsedInstance tparsed = instance_from(tdoc);
    REQUIRE(tparsed.skew.has_value());
    REQUIRE(tparsed.skew->cocycle.has_value());
    CHECK((*tparsed.skew->cocycle)[1][1] == twisted);
    CHECK(skew_json(*tparsed.skew, cyclic_group_json(2)) == tdoc);
  }

  SECTION("a non-permutation action is rejected with its path")
  {
    Json broken = doc;
    broken["action"][1]["perm"] = Json::array({0, 0});
    try {
      instance_from(broken);
      FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("$.action[1].perm") != std::string::npos);
    }
  }

  SECTION("an action violating the group law is rejected")
  {
    Json broken = doc;
    broken["action"][0]["perm"] = Json::array({1, 0});
    CHECK_THROWS_AS(instance_from(broken), std::invalid_argument);
  }
}

TEST_CASE("dynamical systems round-trip", "[json]")
{
  FiniteDynSystem sys;
  sys.space.points = {"a", "b", "c", "d"};
  sys.h.map = {1, 2, 3, 0};
  const Json doc = dynsys_json(sys);
  const ParsedInstance parsed = instance_from(doc);
  REQUIRE(parsed.kind == "dynsys");
  REQUIRE(parsed.dynsys.has_value());
  CHECK(parsed.dynsys->h == sys.h);
  CHECK(parsed.dynsys->space.points == sys.space.points);
  CHECK(dynsys_json(*parsed.dynsys) == doc);

  SECTION("a map that is not a bijection is rejected")
  {
    Json broken = doc;
    broken["map"] = Json::array({0, 0, 1, 2});
    CHECK_THROWS_AS(instance_from(broken), std::invalid_argument);
  }
}

TEST_CASE("instance documents require a known kind", "[json]")
{
  CHECK_THROWS_AS(instance_from(Json{{"points", Json::array()}}), std::invalid_argument);
  try {
    instance_from(Json{{"kind", "module"}});
    FAIL("expected invalid_argument");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("$.kind") != std::string::npos);
  }
}

TEST_CASE("reports are deterministic and sort their checks", "[json]")
{
  const auto make = [] {
    std::vector<Check> checks = {{"zeta", true, ""},
                                 {"alpha", true, "fine"},
                                 {"mid", false, "broke"}};
    return report_json("probe", nullptr, Json{{"seed", 11}}, checks, Json{{"n", 3}});
  };
  const Json a = make();
  const Json b = make();
  CHECK(a.dump() == b.dump());
  CHECK(a["schema"].get<std::string>() == "1");
  CHECK(a["command"].get<std::string>() == "probe");
  CHECK(a["instance"].is_null());
  CHECK_FALSE(a["pass"].get<bool>());
  REQUIRE(a["checks"].size() == 3);
  CHECK(a["checks"][0]["name"].get<std::string>() == "alpha");
  CHECK(a["checks"][1]["name"].get<std::string>() == "mid");
  CHECK(a["checks"][2]["name"].get<std::string>() == "zeta");
  CHECK(a["checks"][2].contains("detail") == false);
  CHECK(a["checks"][1]["detail"].get<std::string>() == "broke");

  SECTION("pass is true exactly when every check passes")
  {
    const Json ok =
        report_json("probe", nullptr, Json::object(), {{"only", true, ""}}, Json());
    CHECK(ok["pass"].get<bool>());
    CHECK(checks_pass({{"a", true, ""}, {"b", true, ""}}));
    CHECK_FALSE(checks_pass({{"a", true, ""}, {"b", false, ""}}));
  }

  SECTION("an instance echo is embedded verbatim")
  {
    const Json echo{{"kind", "dynsys"}, {"points", Json::array({"p"})},
                    {"map", Json::array({0})}};
    const Json r = report_json("probe", &echo, Json::object(), {}, Json());
    CHECK(r["instance"] == echo);
  }
}
