#include "grw/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace grw {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what)
{
  throw std::invalid_argument("at " + path + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& path)
{
  if (!j.is_object())
    bad(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end())
    bad(path, std::string("missing key '") + key + "'");
  return *it;
}

int int_from(const Json& j, const std::string& path)
{
  if (!j.is_number_integer())
    bad(path, "expected an integer");
  return j.get<int>();
}

std::string string_from(const Json& j, const std::string& path)
{
  if (!j.is_string())
    bad(path, "expected a string");
  return j.get<std::string>();
}

const Json& array_at(const Json& j, const char* key, const std::string& path)
{
  const Json& a = member(j, key, path);
  if (!a.is_array())
    bad(path + "." + key, "expected an array");
  return a;
}

std::vector<std::string> string_array_from(const Json& j, const std::string& path)
{
  if (!j.is_array())
    bad(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(string_from(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::string item(const std::string& path, std::size_t i)
{
  return path + "[" + std::to_string(i) + "]";
}

} // namespace

Json rational_json(const Rational& r)
{
  return format_rational(r);
}

Rational rational_from(const Json& j, const std::string& path)
{
  if (j.is_number_integer())
    return Rational(j.get<long long>());
  if (!j.is_string())
    bad(path, "expected a rational as a \"p/q\" string or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    bad(path, e.what());
  }
}

Json vec_json(const Vec& v)
{
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i)
    out.push_back(rational_json(v(i)));
  return out;
}

Vec vec_from(const Json& j, const std::string& path)
{
  if (!j.is_array())
    bad(path, "expected an array of rationals");
  Vec v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Index>(i)) = rational_from(j[i], item(path, i));
  return v;
}

Json poly_json(const Poly& p)
{
  Json coeffs = Json::array();
  for (int k = 0; k <= p.degree(); ++k)
    coeffs.push_back(rational_json(p.coeff(k)));
  return Json{{"coeffs", coeffs}};
}

Poly poly_from(const Json& j, const std::string& path)
{
  const Json& coeffs = array_at(j, "coeffs", path);
  std::vector<Rational> c;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    c.push_back(rational_from(coeffs[i], item(path + ".coeffs", i)));
  return Poly(std::move(c));
}

Json cyclic_group_json(int n)
{
  return Json{{"kind", "cyclic"}, {"n", n}};
}

Json product_group_json(std::vector<Json> factors)
{
  Json list = Json::array();
  for (Json& f : factors)
    list.push_back(std::move(f));
  return Json{{"kind", "product"}, {"factors", list}};
}

FiniteGroup group_from(const Json& j, const std::string& path)
{
  const std::string kind = string_from(member(j, "kind", path), path + ".kind");
  if (kind == "cyclic") {
    const int n = int_from(member(j, "n", path), path + ".n");
    if (n < 1)
      bad(path + ".n", "cyclic order must be at least 1");
    return make_cyclic(n);
  }
  if (kind == "product") {
    const Json& factors = array_at(j, "factors", path);
    if (factors.empty())
      bad(path + ".factors", "a product needs at least one factor");
    FiniteGroup acc = group_from(factors[0], item(path + ".factors", 0));
    for (std::size_t i = 1; i < factors.size(); ++i)
      acc = direct_product(acc, group_from(factors[i], item(path + ".factors", i)));
    return acc;
  }
  if (kind == "table") {
    const Json& table = array_at(j, "table", path);
    FiniteGroup g;
    for (std::size_t r = 0; r < table.size(); ++r) {
      const Json& row = table[r];
      if (!row.is_array())
        bad(item(path + ".table", r), "expected an array of integers");
      std::vector<int> out;
      for (std::size_t c = 0; c < row.size(); ++c)
        out.push_back(int_from(row[c], item(item(path + ".table", r), c)));
      g.table.push_back(std::move(out));
    }
    if (j.contains("labels"))
      g.labels = string_array_from(j["labels"], path + ".labels");
    else
      for (std::size_t i = 0; i < g.table.size(); ++i)
        g.labels.push_back(std::to_string(i));
    if (g.labels.size() != g.table.size())
      bad(path + ".labels", "label count differs from the table size");
    const auto violations = validate_group(g);
    if (!violations.empty())
      bad(path + ".table", "not a group table: " + violations.front().kind + " (" +
                               violations.front().detail + ")");
    return g;
  }
  bad(path + ".kind", "unknown group kind '" + kind + "'");
}

namespace {

GradedRing graded_from(const Json& j, const std::string& path)
{
  const FiniteGroup group = group_from(member(j, "group", path), path + ".group");
  const int order = group.order();

  const Json& labels_doc = array_at(j, "labels", path);
  if (static_cast<int>(labels_doc.size()) != order)
    bad(path + ".labels", "expected one label array per degree (" +
                              std::to_string(order) + ")");
  std::vector<std::vector<std::string>> labels;
  for (std::size_t g = 0; g < labels_doc.size(); ++g)
    labels.push_back(string_array_from(labels_doc[g], item(path + ".labels", g)));

  const auto dim = [&](int g) { return static_cast<Index>(labels[g].size()); };
  std::vector<std::vector<Mat>> structure(order, std::vector<Mat>(order));
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h)
      structure[g][h] = Mat::Zero(dim(g) * dim(h), dim(op(group, g, h)));

  const Json& entries = array_at(j, "structure", path);
  std::vector<std::vector<std::vector<bool>>> seen(order);
  for (int g = 0; g < order; ++g) {
    seen[g].resize(order);
    for (int h = 0; h < order; ++h)
      seen[g][h].assign(static_cast<std::size_t>(dim(g) * dim(h)), false);
  }
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::string epath = item(path + ".structure", k);
    const Json& e = entries[k];
    const int g = int_from(member(e, "g", epath), epath + ".g");
    const int h = int_from(member(e, "h", epath), epath + ".h");
    if (g < 0 || g >= order || h < 0 || h >= order)
      bad(epath, "degree out of range");
    const int i = int_from(member(e, "i", epath), epath + ".i");
    const int jj = int_from(member(e, "j", epath), epath + ".j");
    if (i < 0 || i >= dim(g) || jj < 0 || jj >= dim(h))
      bad(epath, "basis index out of range");
    const Vec row = vec_from(member(e, "coeffs", epath), epath + ".coeffs");
    if (row.size() != dim(op(group, g, h)))
      bad(epath + ".coeffs", "expected " + std::to_string(dim(op(group, g, h))) +
                                 " coordinates");
    const Index flat_row = static_cast<Index>(i) * dim(h) + jj;
    if (seen[g][h][static_cast<std::size_t>(flat_row)])
      bad(epath, "duplicate structure entry for this basis pair");
    seen[g][h][static_cast<std::size_t>(flat_row)] = true;
    structure[g][h].row(flat_row) = row.transpose();
  }

  const Vec unity = vec_from(member(j, "unity", path), path + ".unity");
  if (unity.size() != dim(0))
    bad(path + ".unity", "expected " + std::to_string(dim(0)) + " coordinates");

  try {
    return GradedRing(group, std::move(labels), std::move(structure), unity);
  } catch (const std::exception& e) {
    bad(path, std::string("presentation rejected: ") + e.what());
  }
}

SkewGroupRingSpec skew_from(const Json& j, const std::string& path)
{
  SkewGroupRingSpec spec;
  spec.coefficients.points =
      string_array_from(member(j, "points", path), path + ".points");
  spec.group = group_from(member(j, "group", path), path + ".group");

  const Json& action = array_at(j, "action", path);
  for (std::size_t g = 0; g < action.size(); ++g) {
    const std::string apath = item(path + ".action", g);
    const Json& perm = member(action[g], "perm", apath);
    if (!perm.is_array())
      bad(apath + ".perm", "expected an array of point indices");
    Permutation p;
    for (std::size_t x = 0; x < perm.size(); ++x)
      p.map.push_back(int_from(perm[x], item(apath + ".perm", x)));
    try {
      validate_permutation(p);
    } catch (const std::exception& e) {
      bad(apath + ".perm", e.what());
    }
    spec.action.push_back(std::move(p));
  }

  if (j.contains("cocycle")) {
    const Json& table = j["cocycle"];
    if (!table.is_array())
      bad(path + ".cocycle", "expected an array of arrays of coefficient vectors");
    std::vector<std::vector<Vec>> cocycle;
    for (std::size_t g = 0; g < table.size(); ++g) {
      const Json& row = table[g];
      const std::string rpath = item(path + ".cocycle", g);
      if (!row.is_array())
        bad(rpath, "expected an array of coefficient vectors");
      std::vector<Vec> out;
      for (std::size_t h = 0; h < row.size(); ++h)
        out.push_back(vec_from(row[h], item(rpath, h)));
      cocycle.push_back(std::move(out));
    }
    spec.cocycle = std::move(cocycle);
  }

  const auto problems = validate_spec(spec);
  if (!problems.empty())
    bad(path, "invalid skew presentation: " + problems.front());
  return spec;
}

FiniteDynSystem dynsys_from(const Json& j, const std::string& path)
{
  FiniteDynSystem sys;
  sys.space.points = string_array_from(member(j, "points", path), path + ".points");
  const Json& map = array_at(j, "map", path);
  for (std::size_t x = 0; x < map.size(); ++x)
    sys.h.map.push_back(int_from(map[x], item(path + ".map", x)));
  const auto problems = validate_dynsys(sys);
  if (!problems.empty())
    bad(path, "invalid system: " + problems.front());
  return sys;
}

} // namespace

ParsedInstance instance_from(const Json& doc)
{
  ParsedInstance out;
  out.kind = string_from(member(doc, "kind", "$"), "$.kind");
  out.echo = doc;
  if (out.kind == "graded") {
    out.graded = graded_from(doc, "$");
  } else if (out.kind == "skew") {
    out.skew = skew_from(doc, "$");
    out.graded = build(*out.skew);
  } else if (out.kind == "dynsys") {
    out.dynsys = dynsys_from(doc, "$");
  } else {
    bad("$.kind", "unknown instance kind '" + out.kind + "'");
  }
  return out;
}

Json graded_json(const GradedRing& r, const Json& group_doc)
{
  Json labels = Json::array();
  for (int g = 0; g < r.degrees(); ++g) {
    Json row = Json::array();
    for (const std::string& l : r.labels(g))
      row.push_back(l);
    labels.push_back(std::move(row));
  }
  Json entries = Json::array();
  for (int g = 0; g < r.degrees(); ++g)
    for (int h = 0; h < r.degrees(); ++h)
      for (Index i = 0; i < r.dim(g); ++i)
        for (Index j = 0; j < r.dim(h); ++j) {
          const Vec row = r.structure_row(g, static_cast<int>(i), h, static_cast<int>(j));
          if (row == Vec::Zero(row.size()))
            continue;
          entries.push_back(Json{{"g", g},
                                 {"h", h},
                                 {"i", static_cast<int>(i)},
                                 {"j", static_cast<int>(j)},
                                 {"coeffs", vec_json(row)}});
        }
  return Json{{"kind", "graded"},
              {"group", group_doc},
              {"labels", labels},
              {"structure", entries},
              {"unity", vec_json(r.unity())}};
}

Json skew_json(const SkewGroupRingSpec& spec, const Json& group_doc)
{
  Json points = Json::array();
  for (const std::string& p : spec.coefficients.points)
    points.push_back(p);
  Json action = Json::array();
  for (const Permutation& p : spec.action) {
    Json perm = Json::array();
    for (int x : p.map)
      perm.push_back(x);
    action.push_back(Json{{"perm", perm}});
  }
  Json out{{"kind", "skew"}, {"points", points}, {"group", group_doc}, {"action", action}};
  if (spec.cocycle) {
    Json table = Json::array();
    for (const auto& row : *spec.cocycle) {
      Json jrow = Json::array();
      for (const Vec& v : row)
        jrow.push_back(vec_json(v));
      table.push_back(std::move(jrow));
    }
    out["cocycle"] = std::move(table);
  }
  return out;
}

Json dynsys_json(const FiniteDynSystem& sys)
{
  Json points = Json::array();
  for (const std::string& p : sys.space.points)
    points.push_back(p);
  Json map = Json::array();
  for (int x : sys.h.map)
    map.push_back(x);
  return Json{{"kind", "dynsys"}, {"points", points}, {"map", map}};
}

bool checks_pass(const std::vector<Check>& checks)
{
  for (const Check& c : checks)
    if (!c.pass)
      return false;
  return true;
}

Json report_json(const std::string& command, const Json* instance_echo,
                 const Json& parameters, std::vector<Check> checks, const Json& data)
{
  std::stable_sort(checks.begin(), checks.end(),
                   [](const Check& a, const Check& b) { return a.name < b.name; });
  Json checks_doc = Json::array();
  for (const Check& c : checks) {
    Json entry{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty())
      entry["detail"] = c.detail;
    checks_doc.push_back(std::move(entry));
  }
  return Json{{"schema", "1"},
              {"version", "1.0.0"},
              {"command", command},
              {"instance", instance_echo ? *instance_echo : Json(nullptr)},
              {"parameters", parameters},
              {"pass", checks_pass(checks)},
              {"checks", checks_doc},
              {"data", data}};
}

} // namespace grw
