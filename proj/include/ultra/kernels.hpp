#ifndef ULTRA_KERNELS_HPP
#define ULTRA_KERNELS_HPP

// Data-parallel inner loops. Each kernel exists twice: a plain serial loop
// kept as the reference, and an OpenMP version that must return exactly the
// same result (first hit in lexicographic order, or the same sorted list).
// Library code calls the parallel versions; tests compare the two.

#include "ultra/space.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ultra::kernels {

/// Row-major n x n matrix of comparable labels (distance levels).
struct LabelMatrix {
  std::size_t n = 0;
  std::span<const Level> labels;
  Level at(std::size_t x, std::size_t y) const { return labels[x * n + y]; }
};

/// A minimum spanning tree of the complete graph, as parent links.
struct SpanningTree {
  std::vector<std::size_t> parent;  // parent[root] == root
  std::vector<Level> edge;          // level of the edge to the parent
};

/// Prim's algorithm, O(n^2); ties broken by lowest index.
SpanningTree minimum_spanning_tree(const LabelMatrix& m);

/// Partial map as (source, target) pairs.
using PairMap = std::vector<std::pair<std::size_t, std::size_t>>;

namespace serial {

/// Lexicographically first (x, z, y) with x < z and d(x,z) > max(d(x,y), d(y,z)).
std::optional<TriangleTriple> first_triangle_violation(const LabelMatrix& m);

/// Lexicographically first pair (s, t), s < t, whose label exceeds the
/// largest edge on the spanning-tree path between them. None iff ultrametric.
std::optional<std::pair<std::size_t, std::size_t>> first_minimax_violation(const LabelMatrix& m,
                                                                           const SpanningTree& tree);

/// Bitmasks (ascending) of all subsets A with v(x,y) = v(x,y') for x outside A
/// and y, y' inside A. Requires n < 64.
std::vector<std::uint64_t> module_masks(const LabelMatrix& m);

/// For each partial map, whether some permutation in `automorphisms` agrees
/// with it on its domain.
std::vector<char> extendable_flags(std::span<const std::vector<std::size_t>> automorphisms,
                                   std::span<const PairMap> maps);

/// Smallest mask (as an integer) of a subset with >= 3 elements whose induced
/// structure has no nontrivial module. None iff hereditarily decomposable.
std::optional<std::uint64_t> first_prime_subset(const LabelMatrix& m);

}  // namespace serial

namespace parallel {

std::optional<TriangleTriple> first_triangle_violation(const LabelMatrix& m);
std::optional<std::pair<std::size_t, std::size_t>> first_minimax_violation(const LabelMatrix& m,
                                                                           const SpanningTree& tree);
std::vector<std::uint64_t> module_masks(const LabelMatrix& m);
std::vector<char> extendable_flags(std::span<const std::vector<std::size_t>> automorphisms,
                                   std::span<const PairMap> maps);
std::optional<std::uint64_t> first_prime_subset(const LabelMatrix& m);

}  // namespace parallel

bool is_module_mask(const LabelMatrix& m, std::uint64_t mask, std::uint64_t universe);

}  // namespace ultra::kernels

#endif  // ULTRA_KERNELS_HPP
