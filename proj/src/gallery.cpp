#include "grw/gallery.hpp"

#include <stdexcept>

namespace grw {

GradedRing matrix_units_z2(int p, int q)
{
  if (p < 1 || q < 1)
    throw std::invalid_argument("matrix_units_z2: both blocks must be nonempty");
  const int n = p + q;
  const auto block = [&](int i) { return i < p ? 0 : 1; };

  // basis enumeration per degree: lists of matrix-unit index pairs (i, j)
  std::vector<std::vector<std::pair<int, int>>> units(2);
  for (int b = 0; b < 2; ++b)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if ((block(i) ^ block(j)) == b)
          units[static_cast<std::size_t>(b)].emplace_back(i, j);

  std::vector<std::vector<std::string>> labels(2);
  for (int b = 0; b < 2; ++b)
    for (const auto& [i, j] : units[static_cast<std::size_t>(b)])
      labels[static_cast<std::size_t>(b)].push_back("E" + std::to_string(i + 1) +
                                                    std::to_string(j + 1));

  const auto index_of = [&](int i, int j) {
    const int b = block(i) ^ block(j);
    const auto& list = units[static_cast<std::size_t>(b)];
    for (std::size_t k = 0; k < list.size(); ++k)
      if (list[k] == std::make_pair(i, j))
        return std::make_pair(b, static_cast<int>(k));
    throw std::logic_error("matrix_units_z2: unit not found");
  };

  FiniteGroup z2 = make_cyclic(2);
  std::vector<std::vector<Mat>> structure(2, std::vector<Mat>(2));
  for (int g = 0; g < 2; ++g)
    for (int h = 0; h < 2; ++h) {
      const int gh = g ^ h;
      const auto& bg = units[static_cast<std::size_t>(g)];
      const auto& bh = units[static_cast<std::size_t>(h)];
      Mat s = Mat::Zero(static_cast<Index>(bg.size() * bh.size()),
                        static_cast<Index>(units[static_cast<std::size_t>(gh)].size()));
      for (std::size_t a = 0; a < bg.size(); ++a)
        for (std::size_t b = 0; b < bh.size(); ++b) {
          const auto& [i1, j1] = bg[a];
          const auto& [i2, j2] = bh[b];
          if (j1 != i2)
            continue; // E_{i1 j1} E_{i2 j2} = 0
          const auto [db, k] = index_of(i1, j2);
          if (db != gh)
            throw std::logic_error("matrix_units_z2: degree bookkeeping error");
          s(static_cast<Index>(a * bh.size() + b), k) = 1;
        }
      structure[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] = s;
    }

  // unity = sum of diagonal units, all of which are even
  Vec unity = Vec::Zero(static_cast<Index>(units[0].size()));
  for (int i = 0; i < n; ++i)
    unity(index_of(i, i).second) = 1;
  return GradedRing(z2, labels, structure, unity);
}

GradedRing m3_z2()
{
  return matrix_units_z2(2, 1);
}

GradedRing group_algebra(const FiniteGroup& g)
{
  const int n = g.order();
  std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    labels[static_cast<std::size_t>(x)] = {"u" + g.labels[static_cast<std::size_t>(x)]};
  std::vector<std::vector<Mat>> structure(static_cast<std::size_t>(n),
                                          std::vector<Mat>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Mat s(1, 1);
      s(0, 0) = 1; // u_x u_y = u_{xy}
      structure[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = s;
    }
  Vec unity(1);
  unity(0) = 1;
  return GradedRing(g, labels, structure, unity);
}

SkewGroupRingSpec gauss_z2_spec()
{
  SkewGroupRingSpec spec;
  spec.coefficients.points = {"pt"};
  spec.group = make_cyclic(2);
  spec.action = {Permutation::identity(1), Permutation::identity(1)};
  Vec one = Vec::Ones(1), minus_one(1);
  minus_one(0) = -1;
  spec.cocycle = {{one, one}, {one, minus_one}};
  return spec;
}

SkewGroupRingSpec laurent_group_ring_spec(int n)
{
  if (n < 1)
    throw std::invalid_argument("laurent_group_ring_spec: n must be at least 1");
  SkewGroupRingSpec spec;
  spec.coefficients.points = {"pt"};
  spec.group = make_cyclic(n);
  spec.action.assign(static_cast<std::size_t>(n), Permutation::identity(1));
  return spec;
}

SkewGroupRingSpec free_two_point_spec()
{
  SkewGroupRingSpec spec;
  spec.coefficients.points = {"x", "y"};
  spec.group = make_cyclic(2);
  spec.action = {Permutation::identity(2), Permutation{{1, 0}}};
  return spec;
}

FiniteDynSystem single_orbit(int p)
{
  if (p < 1)
    throw std::invalid_argument("single_orbit: p must be at least 1");
  FiniteDynSystem sys;
  for (int i = 0; i < p; ++i) {
    sys.space.points.push_back("x" + std::to_string(i));
    sys.h.map.push_back((i + 1) % p);
  }
  return sys;
}

} // namespace grw
