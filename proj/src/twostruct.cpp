#include "ultra/twostruct.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace ultra {

namespace {

void gate(const TwoStructure& ts, std::size_t bound, const char* what) {
  if (ts.size() > bound)
    throw Error(ErrorKind::TooLarge,
                std::string(what) + " is limited to " + std::to_string(bound) + " elements, got " + std::to_string(ts.size()));
}

ElementSet from_mask(std::uint64_t mask) {
  ElementSet out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

std::uint64_t to_mask(const ElementSet& a) {
  std::uint64_t m = 0;
  for (std::size_t e : a) m |= std::uint64_t{1} << e;
  return m;
}

void check_elements(const TwoStructure& ts, const ElementSet& a) {
  for (std::size_t e : a)
    if (e >= ts.size()) throw Error(ErrorKind::UnknownElement, "element index " + std::to_string(e) + " is out of range");
}

bool subset_of(const ElementSet& a, const ElementSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

std::vector<ElementSet> sorted_unique(std::vector<ElementSet> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

using LeastStrong = std::function<ElementSet(std::size_t, std::size_t)>;

DecompositionTree assemble(const TwoStructure& ts, const std::vector<ElementSet>& robust, const LeastStrong& lsm) {
  std::map<ElementSet, std::optional<Rational>> label;
  for (const auto& r : robust) label.emplace(r, std::nullopt);
  for (std::size_t x = 0; x < ts.size(); ++x)
    for (std::size_t y = x + 1; y < ts.size(); ++y) {
      auto it = label.find(lsm(x, y));
      if (it == label.end()) throw Error(ErrorKind::NotDecomposable, "pair module is not among the robust modules");
      if (it->second && *it->second != ts.label(x, y))
        throw Error(ErrorKind::NotDecomposable, "robust module carries two different labels");
      it->second = ts.label(x, y);
    }

  DecompositionTree tree;
  for (const auto& [members, l] : label) tree.nodes.push_back({members, *l, std::nullopt, {}});
  for (std::size_t e = 0; e < ts.size(); ++e)
    if (!label.contains(ElementSet{e})) tree.nodes.push_back({ElementSet{e}, Rational(0), std::nullopt, {}});
  std::sort(tree.nodes.begin(), tree.nodes.end(), [](const DecompositionNode& a, const DecompositionNode& b) {
    // nodes sharing a label are disjoint, so the least member decides
    if (a.label != b.label) return a.label > b.label;
    return a.members.front() < b.members.front();
  });
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    std::optional<std::size_t> best;
    for (std::size_t j = 0; j < tree.nodes.size(); ++j) {
      if (i == j || tree.nodes[j].members.size() <= tree.nodes[i].members.size()) continue;
      if (!subset_of(tree.nodes[i].members, tree.nodes[j].members)) continue;
      if (!best || tree.nodes[j].members.size() < tree.nodes[*best].members.size()) best = j;
    }
    tree.nodes[i].parent = best;
    if (best) tree.nodes[*best].children.push_back(i);
  }
  for (auto& node : tree.nodes)
    std::sort(node.children.begin(), node.children.end(), [&](std::size_t a, std::size_t b) {
      return tree.nodes[a].members.front() < tree.nodes[b].members.front();
    });
  return tree;
}

}  // namespace

TwoStructure TwoStructure::from_labels(std::vector<std::string> elements, std::span<const DistanceEntry> entries) {
  TwoStructure ts;
  ts.names_ = std::move(elements);
  for (std::size_t i = 0; i < ts.names_.size(); ++i)
    if (!ts.index_.emplace(ts.names_[i], i).second)
      throw Error(ErrorKind::DuplicatePoint, "element \"" + ts.names_[i] + "\" is listed twice");
  const std::size_t n = ts.size();
  std::vector<std::optional<Rational>> seen(n * n);
  for (const auto& e : entries) {
    const std::size_t x = ts.index_of(e.a);
    const std::size_t y = ts.index_of(e.b);
    if (x == y) throw Error(ErrorKind::SelfPair, "pair (" + e.a + ", " + e.b + ") has equal endpoints");
    if (seen[x * n + y]) throw Error(ErrorKind::DuplicatePair, "pair (" + e.a + ", " + e.b + ") is given twice");
    seen[x * n + y] = seen[y * n + x] = e.d;
  }
  std::set<Rational> values{Rational(0)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      if (!seen[x * n + y])
        throw Error(ErrorKind::MissingPair, "pair (" + ts.names_[x] + ", " + ts.names_[y] + ") has no label");
      values.insert(*seen[x * n + y]);
    }
  ts.values_.assign(values.begin(), values.end());
  ts.levels_.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y) {
        auto it = std::lower_bound(ts.values_.begin(), ts.values_.end(), *seen[x * n + y]);
        ts.levels_[x * n + y] = static_cast<Level>(it - ts.values_.begin());
      }
  return ts;
}

std::size_t TwoStructure::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw Error(ErrorKind::UnknownElement, "unknown element \"" + std::string(name) + "\"");
  return it->second;
}

TwoStructure from_space(const Space& space) {
  TwoStructure ts;
  ts.names_ = space.names();
  for (std::size_t i = 0; i < ts.names_.size(); ++i) ts.index_.emplace(ts.names_[i], i);
  ts.values_ = space.values();
  ts.levels_.reserve(space.size() * space.size());
  for (PointIndex x = 0; x < space.size(); ++x) {
    const auto row = space.row(x);
    ts.levels_.insert(ts.levels_.end(), row.begin(), row.end());
  }
  ts.source_ = space;
  return ts;
}

bool is_module(const TwoStructure& ts, const ElementSet& a) {
  check_elements(ts, a);
  if (a.empty()) return true;
  std::vector<char> in(ts.size(), 0);
  for (std::size_t e : a) in[e] = 1;
  for (std::size_t x = 0; x < ts.size(); ++x) {
    if (in[x]) continue;
    for (std::size_t y : a)
      if (ts.label(x, y) != ts.label(x, a.front())) return false;
  }
  return true;
}

ElementSet least_module(const Space& space, const ElementSet& a) {
  if (a.empty()) throw Error(ErrorKind::EmptySubset, "least module of an empty set");
  for (PointIndex p : a) space.check_point(p);
  const Level d = diameter_level(space, a);
  if (d == 0) return a;
  std::vector<char> in(space.size(), 0);
  for (PointIndex x : a)
    for (PointIndex y = 0; y < space.size(); ++y)
      if (space.level(x, y) < d) in[y] = 1;
  ElementSet out;
  for (PointIndex y = 0; y < space.size(); ++y)
    if (in[y]) out.push_back(y);
  return out;
}

ElementSet least_module_brute_force(const TwoStructure& ts, const ElementSet& a, std::size_t bound) {
  check_elements(ts, a);
  gate(ts, bound, "module enumeration");
  const std::uint64_t need = to_mask(a);
  std::uint64_t acc = ts.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ts.size()) - 1;
  for (std::uint64_t m : kernels::parallel::module_masks(ts.matrix()))
    if ((m & need) == need) acc &= m;
  return from_mask(acc);
}

std::vector<ElementSet> enumerate_modules(const TwoStructure& ts, std::size_t bound) {
  gate(ts, bound, "module enumeration");
  std::vector<ElementSet> out;
  for (std::uint64_t m : kernels::parallel::module_masks(ts.matrix())) out.push_back(from_mask(m));
  return sorted_unique(std::move(out));
}

std::vector<ElementSet> strong_modules(const TwoStructure& ts) {
  if (!ts.source()) return strong_modules_brute_force(ts);
  const Space& s = *ts.source();
  std::vector<ElementSet> out{all_points(s)};
  const auto& values = s.values();
  const Rational beyond(values.back().num() / values.back().den() + 1);
  for (PointIndex a = 0; a < s.size(); ++a) {
    for (const Rational& r : values) out.push_back(ball(s, a, r, Openness::Closed).members);
    for (std::size_t l = 1; l < values.size(); ++l) out.push_back(ball(s, a, values[l], Openness::Open).members);
    out.push_back(ball(s, a, beyond, Openness::Open).members);
  }
  return sorted_unique(std::move(out));
}

std::vector<ElementSet> strong_modules_brute_force(const TwoStructure& ts, std::size_t bound) {
  gate(ts, bound, "module enumeration");
  const auto masks = kernels::parallel::module_masks(ts.matrix());
  std::vector<ElementSet> out;
  for (std::uint64_t m : masks) {
    if (m == 0) continue;
    const bool strong = std::all_of(masks.begin(), masks.end(), [&](std::uint64_t o) {
      return (o & m) == 0 || (o & m) == o || (o & m) == m;
    });
    if (strong) out.push_back(from_mask(m));
  }
  return sorted_unique(std::move(out));
}

std::vector<ElementSet> robust_modules(const TwoStructure& ts) {
  if (!ts.source()) return robust_modules_brute_force(ts);
  const Space& s = *ts.source();
  std::vector<ElementSet> out;
  for (PointIndex a = 0; a < s.size(); ++a)
    for (PointIndex b = 0; b < s.size(); ++b)
      if (a != b) out.push_back(ball(s, a, s.dist(a, b), Openness::Closed).members);
  return sorted_unique(std::move(out));
}

namespace {

ElementSet least_strong_containing(const std::vector<ElementSet>& strong, std::size_t x, std::size_t y) {
  const ElementSet* best = nullptr;
  for (const auto& m : strong)
    if (std::binary_search(m.begin(), m.end(), x) && std::binary_search(m.begin(), m.end(), y))
      if (!best || m.size() < best->size()) best = &m;
  return *best;  // E is always strong
}

}  // namespace

std::vector<ElementSet> robust_modules_brute_force(const TwoStructure& ts, std::size_t bound) {
  const auto strong = strong_modules_brute_force(ts, bound);
  std::vector<ElementSet> out;
  for (std::size_t x = 0; x < ts.size(); ++x)
    for (std::size_t y = x + 1; y < ts.size(); ++y) out.push_back(least_strong_containing(strong, x, y));
  return sorted_unique(std::move(out));
}

DecompositionTree decomposition_tree(const TwoStructure& ts) {
  if (ts.source()) {
    const Space& s = *ts.source();
    return assemble(ts, robust_modules(ts),
                    [&](std::size_t x, std::size_t y) { return ball(s, x, s.dist(x, y), Openness::Closed).members; });
  }
  if (!is_hereditary_decomposable(ts))
    throw Error(ErrorKind::NotDecomposable, "the structure has a prime substructure on three or more elements");
  const auto strong = strong_modules_brute_force(ts);
  return assemble(ts, robust_modules_brute_force(ts),
                  [&](std::size_t x, std::size_t y) { return least_strong_containing(strong, x, y); });
}

bool same_tree(const DecompositionTree& tree, const NerveTree& nerve) {
  if (tree.nodes.size() != nerve.size()) return false;
  for (std::size_t i = 0; i < nerve.size(); ++i) {
    const auto& a = tree.nodes[i];
    const auto& b = nerve.node(i);
    if (a.members != b.members || a.label != b.diameter || a.parent != b.parent || a.children != b.children) return false;
  }
  return true;
}

bool is_hereditary_decomposable(const TwoStructure& ts, std::size_t bound) {
  gate(ts, bound, "hereditary decomposability");
  return !kernels::parallel::first_prime_subset(ts.matrix()).has_value();
}

}  // namespace ultra
