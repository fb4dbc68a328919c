#ifndef ULTRA_TESTS_FIXTURES_HPP
#define ULTRA_TESTS_FIXTURES_HPP

#include "ultra/funcspace.hpp"
#include "ultra/space.hpp"

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

namespace fixtures {

using Entry = std::tuple<std::string, std::string, std::string>;

ultra::Space make(std::vector<std::string> points, const std::vector<Entry>& entries);

ultra::Space one_point();
ultra::Space two_point();          // a, b at distance 1
ultra::Space t3();                 // a, b at 1/2; c at 1 from both
ultra::Space t3_renamed();         // same as t3 with points x, y, z
ultra::Space c4();                 // 2-bit strings
ultra::Space t3_prime();           // {a,b} at 1/2, {c,e} at 1/3, across 1
ultra::Space pair_and_triple();    // {x1,x2} and {y1,y2,y3} at 1/2 inside, 2 across
ultra::Space seven_unbalanced();   // 3 + 4 points whose similar halves differ
ultra::Space product(const std::string& spectrum);

/// Every named fixture, in a fixed order.
std::vector<ultra::Space> all();

/// Pool of 1 to 4 values drawn from a fixed menu, then a random dendrogram
/// with 1 to max_points points. Deterministic in the seed.
ultra::Space random_space(std::uint64_t seed, std::size_t max_points);
ultra::Space random_space_exact(std::uint64_t seed, std::size_t points);

/// Random degree function with product size at most `bound`.
ultra::DegreeFunction random_degree_function(std::uint64_t seed, std::size_t bound);

}  // namespace fixtures

#endif  // ULTRA_TESTS_FIXTURES_HPP
