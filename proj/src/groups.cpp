#include "grw/groups.hpp"

#include <stdexcept>

namespace grw {

FiniteGroup make_cyclic(int n)
{
  if (n < 1)
    throw std::invalid_argument("make_cyclic: order must be at least 1");
  FiniteGroup g;
  g.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      g.table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = (x + y) % n;
  g.labels.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    g.labels.push_back(std::to_string(x));
  return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b)
{
  const int na = a.order(), nb = b.order();
  if (na == 0 || nb == 0)
    throw std::invalid_argument("direct_product: factor of order 0");
  FiniteGroup g;
  const int n = na * nb;
  g.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2) {
          const int lhs = x1 * nb + y1;
          const int rhs = x2 * nb + y2;
          const int px = a.table[static_cast<std::size_t>(x1)][static_cast<std::size_t>(x2)];
          const int py = b.table[static_cast<std::size_t>(y1)][static_cast<std::size_t>(y2)];
          g.table[static_cast<std::size_t>(lhs)][static_cast<std::size_t>(rhs)] = px * nb + py;
        }
  g.labels.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y)
      g.labels.push_back("(" + a.labels[static_cast<std::size_t>(x)] + "," +
                         b.labels[static_cast<std::size_t>(y)] + ")");
  return g;
}

std::vector<GroupViolation> validate_group(const FiniteGroup& g)
{
  std::vector<GroupViolation> bad;
  const int n = g.order();
  if (n == 0) {
    bad.push_back({"shape", {}, "empty table"});
    return bad;
  }
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(g.table[static_cast<std::size_t>(x)].size()) != n) {
      bad.push_back({"shape", {x}, "row has wrong length"});
      return bad;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int p = g.table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      if (p < 0 || p >= n)
        bad.push_back({"closure", {x, y}, "product outside the element range"});
    }
  if (!bad.empty())
    return bad; // indices unusable below
  for (int x = 0; x < n; ++x) {
    if (op(g, 0, x) != x || op(g, x, 0) != x)
      bad.push_back({"identity", {x}, "element 0 is not a two-sided identity here"});
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (op(g, op(g, x, y), z) != op(g, x, op(g, y, z)))
          bad.push_back({"associativity", {x, y, z}, "(x*y)*z != x*(y*z)"});
      }
  for (int x = 0; x < n; ++x) {
    bool has = false;
    for (int y = 0; y < n; ++y)
      if (op(g, x, y) == 0 && op(g, y, x) == 0) {
        has = true;
        break;
      }
    if (!has)
      bad.push_back({"inverse", {x}, "no two-sided inverse"});
  }
  return bad;
}

int op(const FiniteGroup& g, int x, int y)
{
  const int n = g.order();
  if (x < 0 || x >= n || y < 0 || y >= n)
    throw std::invalid_argument("op: element index out of range");
  return g.table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
}

int inv(const FiniteGroup& g, int x)
{
  const int n = g.order();
  for (int y = 0; y < n; ++y)
    if (op(g, x, y) == 0 && op(g, y, x) == 0)
      return y;
  throw std::invalid_argument("inv: element has no two-sided inverse");
}

int order_of(const FiniteGroup& g, int x)
{
  int acc = x;
  int k = 1;
  const int n = g.order();
  while (acc != 0) {
    acc = op(g, acc, x);
    ++k;
    if (k > n)
      throw std::invalid_argument("order_of: no power reaches the identity");
  }
  return k;
}

} // namespace grw
