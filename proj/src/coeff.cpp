#include "grw/coeff.hpp"

#include <algorithm>
#include <stdexcept>

namespace grw {

int Permutation::apply(int x) const
{
  if (x < 0 || x >= size())
    throw std::invalid_argument("Permutation::apply: point out of range");
  return map[static_cast<std::size_t>(x)];
}

Permutation Permutation::inverse() const
{
  Permutation q;
  q.map.assign(map.size(), -1);
  for (int x = 0; x < size(); ++x)
    q.map[static_cast<std::size_t>(map[static_cast<std::size_t>(x)])] = x;
  return q;
}

Permutation Permutation::then(const Permutation& next) const
{
  if (next.size() != size())
    throw std::invalid_argument("Permutation::then: size mismatch");
  Permutation q;
  q.map.reserve(map.size());
  for (int x = 0; x < size(); ++x)
    q.map.push_back(next.apply(apply(x)));
  return q;
}

Permutation Permutation::identity(int n)
{
  Permutation p;
  p.map.resize(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    p.map[static_cast<std::size_t>(x)] = x;
  return p;
}

bool Permutation::is_identity() const
{
  for (int x = 0; x < size(); ++x)
    if (map[static_cast<std::size_t>(x)] != x)
      return false;
  return true;
}

void validate_permutation(const Permutation& p)
{
  const int n = p.size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int x = 0; x < n; ++x) {
    const int y = p.map[static_cast<std::size_t>(x)];
    if (y < 0 || y >= n)
      throw std::invalid_argument("validate_permutation: image out of range");
    if (seen[static_cast<std::size_t>(y)])
      throw std::invalid_argument("validate_permutation: not injective");
    seen[static_cast<std::size_t>(y)] = true;
  }
}

Vec apply_automorphism(const PermutationInduced& a, const Vec& f)
{
  const int n = a.permutation.size();
  if (f.size() != n)
    throw std::invalid_argument("apply_automorphism: element size mismatch");
  Vec g(n);
  for (int x = 0; x < n; ++x)
    g(x) = f(a.permutation.apply(x));
  return g;
}

Poly apply_automorphism(const Shift& a, const Poly& f)
{
  return poly_shift(f, a.shift);
}

std::vector<std::vector<int>> orbits(int x_size, const std::vector<Permutation>& generators)
{
  for (const auto& p : generators) {
    if (p.size() != x_size)
      throw std::invalid_argument("orbits: generator size mismatch");
    validate_permutation(p);
  }
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(static_cast<std::size_t>(x_size), false);
  for (int start = 0; start < x_size; ++start) {
    if (seen[static_cast<std::size_t>(start)])
      continue;
    // stack-based walk through the generator images and preimages
    std::vector<int> orbit, stack{start};
    seen[static_cast<std::size_t>(start)] = true;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      orbit.push_back(x);
      for (const auto& p : generators) {
        for (const int y : {p.apply(x), p.inverse().apply(x)}) {
          if (!seen[static_cast<std::size_t>(y)]) {
            seen[static_cast<std::size_t>(y)] = true;
            stack.push_back(y);
          }
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

bool is_g_invariant_ideal(const FunctionRing& ring, const SubsetIdeal& ideal,
                          const std::vector<PermutationInduced>& actions)
{
  for (const int x : ideal.subset)
    if (x < 0 || x >= ring.size())
      throw std::invalid_argument("is_g_invariant_ideal: subset point out of range");
  for (const auto& a : actions) {
    if (a.permutation.size() != ring.size())
      throw std::invalid_argument("is_g_invariant_ideal: action size mismatch");
    // The automorphism f -> f(p(.)) maps the ideal of S onto the ideal of
    // p^{-1}(S); invariance therefore means p^{-1}(S) ⊆ S.
    const Permutation pinv = a.permutation.inverse();
    for (const int x : ideal.subset)
      if (ideal.subset.find(pinv.apply(x)) == ideal.subset.end())
        return false;
  }
  return true;
}

bool is_g_invariant_ideal(const PolyCoeffRing&, const PrincipalIdeal& ideal,
                          const std::vector<Shift>& actions)
{
  // (f) is carried into itself by z -> z + c iff f divides f(z + c).
  for (const auto& a : actions)
    if (!Poly::divides(ideal.generator, apply_automorphism(a, ideal.generator)))
      return false;
  return true;
}

GSimpleVerdict is_g_simple(const FunctionRing& ring,
                           const std::vector<PermutationInduced>& actions)
{
  std::vector<Permutation> gens;
  gens.reserve(actions.size());
  for (const auto& a : actions) {
    if (a.permutation.size() != ring.size())
      throw std::invalid_argument("is_g_simple: action size mismatch");
    gens.push_back(a.permutation);
  }
  const auto orbs = orbits(ring.size(), gens);
  GSimpleVerdict v;
  if (orbs.size() <= 1) {
    v.g_simple = true;
    v.justification = "the generated permutation group acts transitively, so no proper "
                      "nonzero invariant ideal exists";
    return v;
  }
  // smallest orbit (ties by minimal element) as the invariant witness
  const auto smallest =
      std::min_element(orbs.begin(), orbs.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
          return a.size() < b.size();
        return a.front() < b.front();
      });
  SubsetIdeal w;
  w.subset.insert(smallest->begin(), smallest->end());
  v.g_simple = false;
  v.witness = w;
  v.justification = "the action is not transitive; functions supported on a proper orbit "
                    "form a proper nonzero invariant ideal";
  return v;
}

GSimpleVerdict is_g_simple(const PolyCoeffRing&, const std::vector<Shift>& actions)
{
  GSimpleVerdict v;
  for (const auto& a : actions) {
    if (a.shift != 0) {
      v.g_simple = true;
      v.justification = "a nonzero shift c admits no proper nonzero invariant ideal: for a "
                        "minimal-degree member f, the difference f(z+c) - f(z) lies in the "
                        "ideal with strictly smaller degree, so the ideal contains a nonzero "
                        "constant";
      return v;
    }
  }
  v.g_simple = false;
  PrincipalIdeal w;
  w.generator = Poly::var();
  v.witness = w;
  v.justification = "every shift is zero, so the action is trivial and (z) is a proper "
                    "nonzero invariant ideal";
  return v;
}

} // namespace grw
