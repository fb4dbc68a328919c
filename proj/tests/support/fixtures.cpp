#include "fixtures.hpp"

#include "ultra/generate.hpp"

#include <algorithm>
#include <random>

namespace fixtures {

using ultra::Rational;
using ultra::Space;

Space make(std::vector<std::string> points, const std::vector<Entry>& entries) {
  std::vector<ultra::DistanceEntry> e;
  for (const auto& [a, b, d] : entries) e.push_back({a, b, Rational::parse(d)});
  return ultra::validate_ultrametric(std::move(points), e);
}

Space one_point() { return make({"a"}, {}); }
Space two_point() { return make({"a", "b"}, {{"a", "b", "1"}}); }
Space t3() { return make({"a", "b", "c"}, {{"a", "b", "1/2"}, {"a", "c", "1"}, {"b", "c", "1"}}); }
Space t3_renamed() { return make({"x", "y", "z"}, {{"x", "y", "1/2"}, {"x", "z", "1"}, {"y", "z", "1"}}); }
Space c4() { return ultra::gen_cantor(2); }

Space t3_prime() {
  return make({"a", "b", "c", "e"}, {{"a", "b", "1/2"},
                                     {"c", "e", "1/3"},
                                     {"a", "c", "1"},
                                     {"a", "e", "1"},
                                     {"b", "c", "1"},
                                     {"b", "e", "1"}});
}

Space pair_and_triple() {
  std::vector<std::string> pts{"x1", "x2", "y1", "y2", "y3"};
  std::vector<Entry> e{{"x1", "x2", "1/2"}, {"y1", "y2", "1/2"}, {"y1", "y3", "1/2"}, {"y2", "y3", "1/2"}};
  for (const char* x : {"x1", "x2"})
    for (const char* y : {"y1", "y2", "y3"}) e.emplace_back(x, y, "2");
  return make(pts, e);
}

Space seven_unbalanced() {
  // x1 x2 at 1/3, x3 at 1/2 from them; y1 y2 and y3 y4 at 1/3, the two
  // pairs at 1/2; the halves at 1.
  std::vector<std::string> pts{"x1", "x2", "x3", "y1", "y2", "y3", "y4"};
  return ultra::Space::from_function(pts, [&](std::size_t i, std::size_t j) {
    const bool xi = i < 3, xj = j < 3;
    if (xi != xj) return Rational(1);
    const std::size_t gi = xi ? (i < 2 ? 0 : 1) : (i < 5 ? 0 : 1);
    const std::size_t gj = xj ? (j < 2 ? 0 : 1) : (j < 5 ? 0 : 1);
    return gi == gj ? Rational(1, 3) : Rational(1, 2);
  });
}

Space product(const std::string& spectrum) {
  return ultra::materialize_product(ultra::DegreeFunction::parse(spectrum)).space;
}

std::vector<Space> all() {
  return {one_point(),       two_point(),        t3(),
          t3_renamed(),      c4(),               t3_prime(),
          pair_and_triple(), seven_unbalanced(), ultra::gen_cantor(3),
          product("1/2:2,1:3"), product("1/3:2,1/2:2,1:3")};
}

namespace {

const std::vector<Rational>& menu() {
  static const std::vector<Rational> m{Rational(1, 5), Rational(1, 4), Rational(1, 3), Rational(1, 2),
                                       Rational(1),    Rational(2),    Rational(3)};
  return m;
}

}  // namespace

Space random_space_exact(std::uint64_t seed, std::size_t points) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  const std::size_t k = 1 + ultra::uniform_below(rng, 4);
  ultra::SpectrumSet pool;
  while (pool.size() < k) {
    const Rational r = menu()[ultra::uniform_below(rng, menu().size())];
    if (std::find(pool.begin(), pool.end(), r) == pool.end()) pool.push_back(r);
  }
  return ultra::gen_random(points, rng(), pool);
}

Space random_space(std::uint64_t seed, std::size_t max_points) {
  std::mt19937_64 rng(seed);
  return random_space_exact(seed, 1 + ultra::uniform_below(rng, max_points));
}

ultra::DegreeFunction random_degree_function(std::uint64_t seed, std::size_t bound) {
  std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
  std::map<Rational, std::size_t> s;
  std::size_t size = 1;
  const std::size_t radii = ultra::uniform_below(rng, 5);
  for (std::size_t i = 0; i < radii; ++i) {
    const Rational r = menu()[ultra::uniform_below(rng, menu().size())];
    if (s.contains(r)) continue;
    const std::size_t k = 2 + ultra::uniform_below(rng, 4);
    if (size * k > bound) continue;
    size *= k;
    s.emplace(r, k);
  }
  return ultra::DegreeFunction(std::move(s));
}

}  // namespace fixtures
