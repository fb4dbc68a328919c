#include "ultra/generate.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace ultra {

Space gen_cantor(int depth) {
  if (depth < 1 || depth > 12)
    throw Error(ErrorKind::DepthOutOfRange, "depth must be between 1 and 12, got " + std::to_string(depth));
  const std::size_t n = std::size_t{1} << depth;
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x)
    for (int b = depth - 1; b >= 0; --b) names[x].push_back(((x >> b) & 1) ? '1' : '0');
  // Level l stands for 1/(depth - l + 1); the first differing bit from the
  // left at string index m gives distance 1/(m + 1).
  SpectrumSet values{Rational(0)};
  for (int l = 1; l <= depth; ++l) values.emplace_back(1, depth - l + 1);
  std::vector<Level> levels(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y) {
        const int m = depth - std::bit_width(x ^ y);  // string index of first difference
        levels[x * n + y] = static_cast<Level>(depth - m);
      }
  return Space::from_levels(std::move(names), std::move(values), std::move(levels));
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorKind::InvalidArgument, "empty range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  std::uint64_t v;
  do v = rng();
  while (v > limit);
  return v % bound;
}

namespace {

struct Dendrogram {
  std::mt19937_64 rng;
  std::size_t n;
  std::vector<Level> levels;

  void split(std::vector<PointIndex> points, std::size_t available) {
    const std::size_t m = points.size();
    if (m < 2) return;
    if (available == 0) throw Error(ErrorKind::PoolTooShallow, "pool ran out of values below a split");
    const std::size_t l = uniform_below(rng, 2) == 0 ? available - 1 : uniform_below(rng, available);
    const auto value = static_cast<Level>(l + 1);  // pool index l is level l + 1
    std::vector<std::vector<PointIndex>> groups;
    if (l == 0) {
      for (PointIndex p : points) groups.push_back({p});
    } else {
      const std::size_t k = 2 + uniform_below(rng, m - 1);
      for (std::size_t i = m; i-- > 1;) std::swap(points[i], points[uniform_below(rng, i + 1)]);
      groups.resize(k);
      for (std::size_t i = 0; i < m; ++i) groups[i < k ? i : uniform_below(rng, k)].push_back(points[i]);
    }
    for (std::size_t g = 0; g < groups.size(); ++g)
      for (std::size_t h = g + 1; h < groups.size(); ++h)
        for (PointIndex x : groups[g])
          for (PointIndex y : groups[h]) levels[x * n + y] = levels[y * n + x] = value;
    for (auto& group : groups) {
      std::sort(group.begin(), group.end());
      split(std::move(group), l);
    }
  }
};

}  // namespace

Space gen_random(std::size_t n, std::uint64_t seed, SpectrumSet pool) {
  if (n < 1 || n > Space::max_points) throw Error(ErrorKind::InvalidArgument, "point count out of range");
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  for (const Rational& r : pool)
    if (!r.is_positive()) throw Error(ErrorKind::InvalidArgument, "pool values must be positive, got " + r.str());
  if (pool.size() >= std::numeric_limits<Level>::max()) throw Error(ErrorKind::InvalidArgument, "pool too long");

  Dendrogram d{std::mt19937_64(seed), n, std::vector<Level>(n * n, 0)};
  std::vector<PointIndex> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  d.split(std::move(all), pool.size());

  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = "p" + std::to_string(i);
  SpectrumSet values{Rational(0)};
  values.insert(values.end(), pool.begin(), pool.end());
  return Space::from_levels(std::move(names), std::move(values), std::move(d.levels));
}

}  // namespace ultra
