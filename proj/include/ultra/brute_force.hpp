#ifndef ULTRA_BRUTE_FORCE_HPP
#define ULTRA_BRUTE_FORCE_HPP

// Exhaustive deciders used to cross-check the structural ones. Each throws
// TooLarge above its size gate unless a larger limit is passed.

#include "ultra/isometry.hpp"

#include <vector>

namespace ultra {

struct BruteForceLimits {
  std::size_t partial_maps = 6;   // enumeration of partial isometries
  std::size_t automorphisms = 8;  // enumeration of the isometry group
};

/// All self-isometries, in lexicographic order of their image vectors.
std::vector<Bijection> enumerate_automorphisms(const Space& space, std::size_t limit = 8);

/// All partial self-isometries (including the empty map), domains listed in
/// increasing point order. With spec_preserving, only local spec-isometries.
std::vector<PartialMap> enumerate_partial_isometries(const Analysis& analysis, std::size_t limit = 6,
                                                     bool spec_preserving = false);

/// Orbit of point 0 under the enumerated group covers everything.
bool is_transitive_brute_force(const Space& space, std::size_t limit = 8);

/// Every partial isometry agrees with some enumerated automorphism. Also runs
/// extend_isometry on each map and throws std::logic_error on disagreement.
bool is_homogeneous_brute_force(const Analysis& analysis, BruteForceLimits limits = {});

/// Every local spec-isometry agrees with some enumerated automorphism. Also
/// extends each map point by point with spec_extension_step, and throws
/// std::logic_error if the verdict differs from condition (A) or if a chain
/// fails while (A) holds.
bool is_spec_homogeneous_brute_force(const Analysis& analysis, BruteForceLimits limits = {});

}  // namespace ultra

#endif  // ULTRA_BRUTE_FORCE_HPP
