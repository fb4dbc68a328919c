#include "ultra/kernels.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include <omp.h>

namespace ultra::kernels {

namespace {

constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

std::optional<TriangleTriple> triangle_violation_from(const LabelMatrix& m, std::size_t x) {
  for (std::size_t z = x + 1; z < m.n; ++z) {
    const Level xz = m.at(x, z);
    for (std::size_t y = 0; y < m.n; ++y) {
      if (y == x || y == z) continue;
      if (xz > std::max(m.at(x, y), m.at(y, z))) return TriangleTriple{x, z, y};
    }
  }
  return std::nullopt;
}

struct Adjacency {
  std::vector<std::vector<std::pair<std::size_t, Level>>> out;
};

Adjacency tree_adjacency(const SpanningTree& tree) {
  Adjacency adj;
  adj.out.resize(tree.parent.size());
  for (std::size_t v = 0; v < tree.parent.size(); ++v) {
    const std::size_t p = tree.parent[v];
    if (p == v) continue;
    adj.out[v].emplace_back(p, tree.edge[v]);
    adj.out[p].emplace_back(v, tree.edge[v]);
  }
  return adj;
}

// Largest edge on the tree path from s to every vertex.
void path_maxima(const Adjacency& adj, std::size_t s, std::vector<Level>& best, std::vector<std::size_t>& stack) {
  std::fill(best.begin(), best.end(), std::numeric_limits<Level>::max());
  best[s] = 0;
  stack.clear();
  stack.push_back(s);
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (const auto& [w, lvl] : adj.out[v]) {
      if (best[w] != std::numeric_limits<Level>::max()) continue;
      best[w] = std::max(best[v], lvl);
      stack.push_back(w);
    }
  }
}

std::size_t minimax_violation_from(const LabelMatrix& m, const Adjacency& adj, std::size_t s,
                                   std::vector<Level>& best, std::vector<std::size_t>& stack) {
  path_maxima(adj, s, best, stack);
  for (std::size_t t = s + 1; t < m.n; ++t)
    if (m.at(s, t) > best[t]) return t;
  return none;
}

bool extends(const std::vector<std::size_t>& perm, const PairMap& map) {
  return std::all_of(map.begin(), map.end(), [&](const auto& st) { return perm[st.first] == st.second; });
}

bool has_nontrivial_module(const LabelMatrix& m, std::uint64_t universe) {
  const int size = std::popcount(universe);
  // Proper submasks of the universe with at least two elements.
  for (std::uint64_t sub = (universe - 1) & universe; sub != 0; sub = (sub - 1) & universe) {
    const int k = std::popcount(sub);
    if (k < 2 || k >= size) continue;
    if (is_module_mask(m, sub, universe)) return true;
  }
  return false;
}

void require_mask_width(const LabelMatrix& m) {
  if (m.n >= 63) throw std::invalid_argument("subset kernels require fewer than 63 elements");
}

}  // namespace

bool is_module_mask(const LabelMatrix& m, std::uint64_t mask, std::uint64_t universe) {
  if (mask == 0) return true;
  const std::size_t first = static_cast<std::size_t>(std::countr_zero(mask));
  for (std::uint64_t outside = universe & ~mask; outside != 0; outside &= outside - 1) {
    const auto x = static_cast<std::size_t>(std::countr_zero(outside));
    const Level ref = m.at(x, first);
    for (std::uint64_t in = mask & (mask - 1); in != 0; in &= in - 1) {
      if (m.at(x, static_cast<std::size_t>(std::countr_zero(in))) != ref) return false;
    }
  }
  return true;
}

SpanningTree minimum_spanning_tree(const LabelMatrix& m) {
  SpanningTree tree;
  tree.parent.assign(m.n, 0);
  tree.edge.assign(m.n, 0);
  if (m.n == 0) return tree;
  std::vector<char> in_tree(m.n, 0);
  std::vector<Level> key(m.n, std::numeric_limits<Level>::max());
  std::vector<std::size_t> from(m.n, 0);
  key[0] = 0;
  for (std::size_t step = 0; step < m.n; ++step) {
    std::size_t v = none;
    for (std::size_t u = 0; u < m.n; ++u)
      if (!in_tree[u] && (v == none || key[u] < key[v])) v = u;
    in_tree[v] = 1;
    tree.parent[v] = step == 0 ? v : from[v];
    tree.edge[v] = step == 0 ? 0 : key[v];
    for (std::size_t u = 0; u < m.n; ++u) {
      if (!in_tree[u] && m.at(v, u) < key[u]) {
        key[u] = m.at(v, u);
        from[u] = v;
      }
    }
  }
  return tree;
}

namespace serial {

std::optional<TriangleTriple> first_triangle_violation(const LabelMatrix& m) {
  for (std::size_t x = 0; x < m.n; ++x)
    if (auto t = triangle_violation_from(m, x)) return t;
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> first_minimax_violation(const LabelMatrix& m,
                                                                           const SpanningTree& tree) {
  const Adjacency adj = tree_adjacency(tree);
  std::vector<Level> best(m.n);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < m.n; ++s) {
    const std::size_t t = minimax_violation_from(m, adj, s, best, stack);
    if (t != none) return std::pair{s, t};
  }
  return std::nullopt;
}

std::vector<std::uint64_t> module_masks(const LabelMatrix& m) {
  require_mask_width(m);
  const std::uint64_t universe = (std::uint64_t{1} << m.n) - 1;
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask <= universe; ++mask)
    if (is_module_mask(m, mask, universe)) out.push_back(mask);
  return out;
}

std::vector<char> extendable_flags(std::span<const std::vector<std::size_t>> automorphisms,
                                   std::span<const PairMap> maps) {
  std::vector<char> flags(maps.size(), 0);
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (const auto& g : automorphisms)
      if (extends(g, maps[i])) {
        flags[i] = 1;
        break;
      }
  return flags;
}

std::optional<std::uint64_t> first_prime_subset(const LabelMatrix& m) {
  require_mask_width(m);
  const std::uint64_t universe = (std::uint64_t{1} << m.n) - 1;
  for (std::uint64_t mask = 1; mask <= universe; ++mask) {
    if (std::popcount(mask) < 3) continue;
    if (!has_nontrivial_module(m, mask)) return mask;
  }
  return std::nullopt;
}

}  // namespace serial

namespace parallel {

std::optional<TriangleTriple> first_triangle_violation(const LabelMatrix& m) {
  std::size_t best_x = none;
  std::optional<TriangleTriple> best;
  const auto n = static_cast<std::ptrdiff_t>(m.n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t xi = 0; xi < n; ++xi) {
    const auto x = static_cast<std::size_t>(xi);
    std::size_t current;
#pragma omp atomic read
    current = best_x;
    if (x > current) continue;
    if (auto t = triangle_violation_from(m, x)) {
#pragma omp critical(ultra_triangle)
      if (x < best_x) {
#pragma omp atomic write
        best_x = x;
        best = t;
      }
    }
  }
  return best;
}

std::optional<std::pair<std::size_t, std::size_t>> first_minimax_violation(const LabelMatrix& m,
                                                                           const SpanningTree& tree) {
  const Adjacency adj = tree_adjacency(tree);
  std::size_t best_s = none;
  std::size_t best_t = none;
  const auto n = static_cast<std::ptrdiff_t>(m.n);
#pragma omp parallel
  {
    std::vector<Level> best(m.n);
    std::vector<std::size_t> stack;
#pragma omp for schedule(dynamic, 8)
    for (std::ptrdiff_t si = 0; si < n; ++si) {
      const auto s = static_cast<std::size_t>(si);
      std::size_t current;
#pragma omp atomic read
      current = best_s;
      if (s > current) continue;
      const std::size_t t = minimax_violation_from(m, adj, s, best, stack);
      if (t != none) {
#pragma omp critical(ultra_minimax)
        if (s < best_s) {
#pragma omp atomic write
          best_s = s;
          best_t = t;
        }
      }
    }
  }
  if (best_s == none) return std::nullopt;
  return std::pair{best_s, best_t};
}

std::vector<std::uint64_t> module_masks(const LabelMatrix& m) {
  require_mask_width(m);
  const std::uint64_t universe = (std::uint64_t{1} << m.n) - 1;
  std::vector<char> flags(static_cast<std::size_t>(universe) + 1, 0);
  const auto count = static_cast<std::int64_t>(universe) + 1;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i)
    flags[static_cast<std::size_t>(i)] = is_module_mask(m, static_cast<std::uint64_t>(i), universe) ? 1 : 0;
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < flags.size(); ++i)
    if (flags[i]) out.push_back(i);
  return out;
}

std::vector<char> extendable_flags(std::span<const std::vector<std::size_t>> automorphisms,
                                   std::span<const PairMap> maps) {
  std::vector<char> flags(maps.size(), 0);
  if (automorphisms.empty()) return flags;
  // Only the automorphisms sending the first domain point to its image can
  // extend a map, so bucket the group by (x, g(x)).
  const std::size_t n = automorphisms.front().size();
  std::vector<std::vector<std::size_t>> bucket(n * n);
  for (std::size_t k = 0; k < automorphisms.size(); ++k)
    for (std::size_t x = 0; x < n; ++x) bucket[x * n + automorphisms[k][x]].push_back(k);
  const auto count = static_cast<std::ptrdiff_t>(maps.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto& map = maps[static_cast<std::size_t>(i)];
    if (map.empty()) {
      flags[static_cast<std::size_t>(i)] = 1;
      continue;
    }
    const auto& [x, y] = map.front();
    if (x >= n || y >= n) continue;
    for (std::size_t k : bucket[x * n + y])
      if (extends(automorphisms[k], map)) {
        flags[static_cast<std::size_t>(i)] = 1;
        break;
      }
  }
  return flags;
}

std::optional<std::uint64_t> first_prime_subset(const LabelMatrix& m) {
  require_mask_width(m);
  const std::uint64_t universe = (std::uint64_t{1} << m.n) - 1;
  std::vector<char> prime(static_cast<std::size_t>(universe) + 1, 0);
  const auto count = static_cast<std::int64_t>(universe) + 1;
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 1; i < count; ++i) {
    const auto mask = static_cast<std::uint64_t>(i);
    if (std::popcount(mask) >= 3 && !has_nontrivial_module(m, mask)) prime[static_cast<std::size_t>(i)] = 1;
  }
  for (std::size_t i = 0; i < prime.size(); ++i)
    if (prime[i]) return i;
  return std::nullopt;
}

}  // namespace parallel

}  // namespace ultra::kernels
