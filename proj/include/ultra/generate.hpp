#ifndef ULTRA_GENERATE_HPP
#define ULTRA_GENERATE_HPP

#include "ultra/space.hpp"

#include <cstdint>
#include <random>

namespace ultra {

/// All depth-bit strings, d(x, y) = 1/(m + 1) with m the first index where
/// they differ. 1 <= depth <= 12, otherwise DepthOutOfRange.
Space gen_cantor(int depth);

/// Random dendrogram on n points named p0, p1, ...; every split uses a pool
/// value strictly below the one of the enclosing split. The pool is sorted
/// and deduplicated first; values must be positive. Same arguments, same
/// space.
Space gen_random(std::size_t n, std::uint64_t seed, SpectrumSet pool);

/// Uniform integer in [0, bound) by rejection, identical on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace ultra

#endif  // ULTRA_GENERATE_HPP
