#include "ultra/nerve.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace ultra {

std::optional<std::size_t> NerveTree::node_at(PointIndex p, Level level) const {
  for (std::size_t id : chain(p)) {
    if (nodes_[id].level == level) return id;
    if (nodes_[id].level > level) break;
  }
  return std::nullopt;
}

std::size_t NerveTree::smallest_containing(const Space& space, const PointSet& points) const {
  const Level d = diameter_level(space, points);
  for (std::size_t id : chain(points.front()))
    if (nodes_[id].level >= d) return id;
  return root();
}

std::optional<std::size_t> NerveTree::find(const PointSet& members) const {
  if (members.empty() || members.front() >= chains_.size()) return std::nullopt;
  for (std::size_t id : chain(members.front()))
    if (nodes_[id].members == members) return id;
  return std::nullopt;
}

NerveTree build_nerve(const Space& space) {
  const std::size_t n = space.size();
  const std::size_t levels = space.values().size();

  // Raw node discovery: key (level, least member) identifies B(p, r) because
  // two closed balls of the same radius are equal or disjoint.
  std::unordered_map<std::size_t, std::size_t> by_key;
  std::vector<NerveNode> raw;
  std::vector<std::vector<std::size_t>> raw_chains(n);
  std::vector<std::vector<PointIndex>> buckets(levels);

  for (PointIndex p = 0; p < n; ++p) {
    for (auto& b : buckets) b.clear();
    const auto row = space.row(p);
    for (PointIndex x = 0; x < n; ++x) buckets[row[x]].push_back(x);
    PointIndex least = p;
    std::size_t prefix = 0;
    for (std::size_t l = 0; l < levels; ++l) {
      if (buckets[l].empty()) continue;
      least = std::min(least, buckets[l].front());
      prefix += buckets[l].size();
      const std::size_t key = l * n + least;
      auto [it, inserted] = by_key.emplace(key, raw.size());
      if (inserted) {
        NerveNode node;
        node.members.reserve(prefix);
        for (std::size_t k = 0; k <= l; ++k) node.members.insert(node.members.end(), buckets[k].begin(), buckets[k].end());
        std::sort(node.members.begin(), node.members.end());
        node.level = static_cast<Level>(l);
        node.diameter = space.values()[l];
        raw.push_back(std::move(node));
      }
      raw_chains[p].push_back(it->second);
    }
  }

  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (raw[a].level != raw[b].level) return raw[a].level > raw[b].level;
    return raw[a].least() < raw[b].least();
  });
  std::vector<std::size_t> rank(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  NerveTree tree;
  tree.nodes_.reserve(raw.size());
  for (std::size_t id : order) tree.nodes_.push_back(std::move(raw[id]));
  tree.chains_.resize(n);
  for (PointIndex p = 0; p < n; ++p) {
    auto& chain = tree.chains_[p];
    chain.reserve(raw_chains[p].size());
    for (std::size_t id : raw_chains[p]) chain.push_back(rank[id]);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) tree.nodes_[chain[i]].parent = chain[i + 1];
  }
  for (std::size_t i = 0; i < tree.nodes_.size(); ++i)
    if (auto p = tree.nodes_[i].parent) tree.nodes_[*p].children.push_back(i);
  for (auto& node : tree.nodes_) {
    std::sort(node.children.begin(), node.children.end(), [&](std::size_t a, std::size_t b) {
      return tree.nodes_[a].least() < tree.nodes_[b].least();
    });
    node.children.erase(std::unique(node.children.begin(), node.children.end()), node.children.end());
  }
  return tree;
}

std::vector<Ball> sons(const Space& space, const Ball& b) {
  if (b.members.empty()) throw Error(ErrorKind::EmptySubset, "sons of an empty ball");
  const Level r = diameter_level(space, b.members);
  if (r == 0) throw Error(ErrorKind::TrivialBall, "a ball of diameter 0 has no sons");
  std::vector<Ball> out;
  std::vector<char> taken(b.members.size(), 0);
  for (std::size_t i = 0; i < b.members.size(); ++i) {
    if (taken[i]) continue;
    Ball son;
    son.openness = Openness::Open;
    for (std::size_t j = i; j < b.members.size(); ++j)
      if (space.level(b.members[i], b.members[j]) < r) {
        taken[j] = 1;
        son.members.push_back(b.members[j]);
      }
    son.diameter = diameter(space, son.members);
    out.push_back(std::move(son));
  }
  return out;
}

DegreeSequence degree_sequence(const Space& space, const NerveTree& nerve) {
  DegreeSequence out;
  for (std::size_t i = 0; i < nerve.size(); ++i) {
    const auto& node = nerve.node(i);
    if (node.is_leaf()) continue;
    const std::size_t count = node.children.size();
    out.per_ball[i] = count;
    auto& slot = out.per_radius[node.diameter];
    slot = std::max(slot, count);
  }
  (void)space;
  return out;
}

DegreeSequence degree_sequence(const Space& space) { return degree_sequence(space, build_nerve(space)); }

SpectrumSet past(const Space& space, const NerveTree& nerve, const PointSet& subset) {
  if (subset.empty()) throw Error(ErrorKind::EmptySubset, "past of an empty set");
  const Level d = diameter_level(space, subset);
  SpectrumSet out;
  for (std::size_t id : nerve.chain(subset.front()))
    if (nerve.node(id).level >= d) out.push_back(nerve.node(id).diameter);
  return out;
}

bool similar_by_spectra(const Space& space, const Ball& b, const Ball& other) {
  if (b.kind() != other.kind()) return false;
  std::set<SpectrumSet> seen;
  for (PointIndex x : b.members) seen.insert(spectrum_at(space, x));
  return std::any_of(other.members.begin(), other.members.end(),
                     [&](PointIndex y) { return seen.contains(spectrum_at(space, y)); });
}

bool similar_by_past(const Space& space, const NerveTree& nerve, const Ball& b, const Ball& other) {
  if (past(space, nerve, b.members) != past(space, nerve, other.members)) return false;
  const auto ms = multispectrum_within(space, b.members);
  const auto ms_other = multispectrum_within(space, other.members);
  std::vector<SpectrumSet> common;
  std::set_intersection(ms.begin(), ms.end(), ms_other.begin(), ms_other.end(), std::back_inserter(common));
  return !common.empty();
}

bool similar(const Space& space, const NerveTree& nerve, const Ball& b, const Ball& other) {
  const bool by_spectra = similar_by_spectra(space, b, other);
  const bool by_past = similar_by_past(space, nerve, b, other);
  if (by_spectra != by_past) throw std::logic_error("similarity criteria disagree");
  return by_spectra;
}

}  // namespace ultra
