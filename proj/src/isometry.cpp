#include "ultra/isometry.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace ultra {

namespace {

Bijection identity(std::size_t n) {
  Bijection f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = i;
  return f;
}

Bijection inverse(const Bijection& f) {
  Bijection g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) g[f[i]] = i;
  return g;
}

// Son of nerve node `parent` that contains p.
std::size_t son_containing(const NerveTree& nerve, std::size_t parent, PointIndex p) {
  for (std::size_t id : nerve.chain(p))
    if (nerve.node(id).parent == parent) return id;
  throw std::logic_error("point is not below the given node");
}

// Spec(M restricted to node, p) as levels: the chain of p up to node.
std::vector<Level> local_spectrum(const NerveTree& nerve, std::size_t node, PointIndex p) {
  std::vector<Level> out;
  for (std::size_t id : nerve.chain(p)) {
    out.push_back(nerve.node(id).level);
    if (id == node) break;
  }
  return out;
}

PartialMap normalized(const PartialMap& phi) {
  PartialMap m = phi;
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  return m;
}

// Embedding of nerve subtrees of a into nerve subtrees of b.
class Embedder {
 public:
  Embedder(const NerveTree& a, const NerveTree& b) : a_(a), b_(b) {}

  // Node of b inside `beta` that can host u (beta itself for a leaf).
  std::optional<std::size_t> within(std::size_t u, std::size_t beta) {
    const auto& nu = a_.node(u);
    if (nu.is_leaf()) return beta;
    auto key = std::make_pair(u, beta);
    if (auto it = within_.find(key); it != within_.end()) return it->second;
    std::optional<std::size_t> out;
    const auto& nb = b_.node(beta);
    if (nb.diameter == nu.diameter) {
      if (fit(u, beta)) out = beta;
    } else if (nu.diameter < nb.diameter) {
      for (std::size_t c : nb.children)
        if ((out = within(u, c))) break;
    }
    within_[key] = out;
    return out;
  }

  void build(std::size_t u, std::size_t beta, Bijection& out) {
    const auto& nu = a_.node(u);
    if (nu.is_leaf()) {
      out[nu.least()] = b_.node(beta).least();
      return;
    }
    const std::size_t d = *within(u, beta);
    const auto& match = matches_.at({u, d});
    for (std::size_t i = 0; i < nu.children.size(); ++i) build(nu.children[i], b_.node(d).children[match[i]], out);
  }

 private:
  // Whether the children of u can be sent to distinct children of d.
  bool fit(std::size_t u, std::size_t d) {
    const auto& left = a_.node(u).children;
    const auto& right = b_.node(d).children;
    if (left.size() > right.size()) return false;
    std::vector<std::vector<std::size_t>> adj(left.size());
    for (std::size_t i = 0; i < left.size(); ++i)
      for (std::size_t j = 0; j < right.size(); ++j)
        if (within(left[i], right[j])) adj[i].push_back(j);
    std::vector<std::size_t> owner(right.size(), npos);
    for (std::size_t i = 0; i < left.size(); ++i) {
      std::vector<char> seen(right.size(), 0);
      if (!augment(i, adj, owner, seen)) return false;
    }
    std::vector<std::size_t> match(left.size());
    for (std::size_t j = 0; j < right.size(); ++j)
      if (owner[j] != npos) match[owner[j]] = j;
    matches_[{u, d}] = std::move(match);
    return true;
  }

  static bool augment(std::size_t i, const std::vector<std::vector<std::size_t>>& adj, std::vector<std::size_t>& owner,
                      std::vector<char>& seen) {
    for (std::size_t j : adj[i]) {
      if (seen[j]) continue;
      seen[j] = 1;
      if (owner[j] == npos || augment(owner[j], adj, owner, seen)) {
        owner[j] = i;
        return true;
      }
    }
    return false;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  const NerveTree& a_;
  const NerveTree& b_;
  std::map<std::pair<std::size_t, std::size_t>, std::optional<std::size_t>> within_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> matches_;
};

// Self-isometry sending x to y, for points with equal pointed codes: walk
// both chains from the root and pair off the unmarked children by code.
Bijection map_along_chains(const Analysis& an, PointIndex x, PointIndex y) {
  const NerveTree& nerve = an.nerve();
  const std::vector<int>& codes = an.node_codes();
  const auto cx = nerve.chain(x);
  const auto cy = nerve.chain(y);
  Bijection f(an.space().size());
  for (std::size_t i = cx.size(); i-- > 1;) {
    const auto& bx = nerve.node(cx[i]);
    const auto& by = nerve.node(cy[i]);
    std::vector<char> used(by.children.size(), 0);
    for (std::size_t k = 0; k < by.children.size(); ++k)
      if (by.children[k] == cy[i - 1]) used[k] = 1;
    for (std::size_t c : bx.children) {
      if (c == cx[i - 1]) continue;
      std::size_t k = 0;
      while (k < by.children.size() && (used[k] || codes[by.children[k]] != codes[c])) ++k;
      if (k == by.children.size()) throw std::logic_error("automorphism_mapping: pointed codes inconsistent");
      used[k] = 1;
      match_subtrees(nerve, codes, c, nerve, codes, by.children[k], f);
    }
  }
  f[x] = y;
  return f;
}

// The caller checks the assembled map once at the end.
Bijection extend_rec(const Analysis& an, const PartialMap& phi) {
  const Space& s = an.space();
  if (phi.empty()) return identity(s.size());
  if (phi.size() == 1) return map_along_chains(an, phi[0].first, phi[0].second);

  // a minimizes d(a, F \ {a}); ties go to the earlier point.
  std::size_t pick = 0;
  Level best = 0;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    Level m = std::numeric_limits<Level>::max();
    for (std::size_t j = 0; j < phi.size(); ++j)
      if (j != i) m = std::min(m, s.level(phi[i].first, phi[j].first));
    if (i == 0 || m < best) {
      best = m;
      pick = i;
    }
  }
  const PointIndex a = phi[pick].first;
  PartialMap rest = phi;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pick));

  const Bijection fa = extend_rec(an, {phi[pick]});
  const Bijection fr = extend_rec(an, rest);
  const Bijection fr_inv = inverse(fr);
  const Bijection fa_inv = inverse(fa);

  const std::size_t n = s.size();
  std::vector<char> in_b0(n, 0), in_b0pp(n, 0);
  for (PointIndex x = 0; x < n; ++x)
    if (s.level(a, x) < best) in_b0[x] = 1;
  // B0'' = fr^-1[fa[B0]]
  for (PointIndex x = 0; x < n; ++x)
    if (in_b0[x]) in_b0pp[fr_inv[fa[x]]] = 1;

  Bijection f(n);
  for (PointIndex x = 0; x < n; ++x) {
    if (in_b0[x])
      f[x] = fa[x];
    else if (in_b0pp[x])
      f[x] = fr[fa_inv[fr[x]]];
    else
      f[x] = fr[x];
  }
  return f;
}

}  // namespace

bool check_partial_isometry(const Space& source, const Space& target, const PartialMap& map) {
  for (const auto& [x, y] : map) {
    source.check_point(x);
    target.check_point(y);
  }
  for (std::size_t i = 0; i < map.size(); ++i)
    for (std::size_t j = i + 1; j < map.size(); ++j)
      if (source.dist(map[i].first, map[j].first) != target.dist(map[i].second, map[j].second)) return false;
  return true;
}

bool check_spec_isometry(const Analysis& an, const PartialMap& map) {
  if (!check_partial_isometry(an.space(), an.space(), map)) return false;
  return std::all_of(map.begin(), map.end(),
                     [&](const auto& p) { return an.spectrum_id(p.first) == an.spectrum_id(p.second); });
}

bool is_automorphism(const Space& space, const Bijection& f) {
  const std::size_t n = space.size();
  if (f.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (PointIndex y : f) {
    if (y >= n || hit[y]) return false;
    hit[y] = 1;
  }
  for (PointIndex x = 0; x < n; ++x)
    for (PointIndex y = x + 1; y < n; ++y)
      if (space.level(x, y) != space.level(f[x], f[y])) return false;
  return true;
}

bool extends(const Bijection& f, const PartialMap& phi) {
  return std::all_of(phi.begin(), phi.end(), [&](const auto& p) { return p.first < f.size() && f[p.first] == p.second; });
}

std::optional<Bijection> isometric(const Space& a, const Space& b) {
  if (a.size() != b.size()) return std::nullopt;
  const NerveTree na = build_nerve(a);
  const NerveTree nb = build_nerve(b);
  CodeTable table;
  const auto ca = node_codes(na, table);
  const auto cb = node_codes(nb, table);
  if (ca[na.root()] != cb[nb.root()]) return std::nullopt;
  Bijection f(a.size());
  match_subtrees(na, ca, na.root(), nb, cb, nb.root(), f);
  PartialMap graph;
  for (PointIndex x = 0; x < f.size(); ++x) graph.emplace_back(x, f[x]);
  if (!check_partial_isometry(a, b, graph)) throw std::logic_error("isometric: witness is not an isometry");
  return f;
}

std::optional<Bijection> find_subspace_embedding(const Space& a, const Space& b) {
  if (a.size() > b.size()) return std::nullopt;
  const NerveTree na = build_nerve(a);
  const NerveTree nb = build_nerve(b);
  Embedder e(na, nb);
  if (!e.within(na.root(), nb.root())) return std::nullopt;
  Bijection f(a.size());
  e.build(na.root(), nb.root(), f);
  PartialMap graph;
  for (PointIndex x = 0; x < f.size(); ++x) graph.emplace_back(x, f[x]);
  if (!check_partial_isometry(a, b, graph)) throw std::logic_error("find_subspace_embedding: witness is not an isometry");
  return f;
}

bool is_transitive(const Analysis& an) {
  for (PointIndex p = 1; p < an.space().size(); ++p)
    if (an.pointed_code(p) != an.pointed_code(0)) return false;
  return true;
}

bool is_transitive(const Space& space) { return is_transitive(Analysis(space)); }

std::optional<Bijection> automorphism_mapping(const Analysis& an, PointIndex x, PointIndex y) {
  const Space& s = an.space();
  s.check_point(x);
  s.check_point(y);
  if (an.pointed_code(x) != an.pointed_code(y)) return std::nullopt;
  Bijection f = map_along_chains(an, x, y);
  if (!is_automorphism(s, f)) throw std::logic_error("automorphism_mapping: witness is not an isometry");
  return f;
}

std::optional<Bijection> extend_isometry(const Analysis& an, const PartialMap& phi) {
  const Space& s = an.space();
  if (!check_partial_isometry(s, s, phi))
    throw Error(ErrorKind::NotAnIsometry, "the map does not preserve distances");
  const PartialMap m = normalized(phi);
  for (const auto& [x, y] : m)
    if (an.pointed_code(x) != an.pointed_code(y)) return std::nullopt;
  Bijection f = extend_rec(an, m);
  if (!is_automorphism(s, f) || !extends(f, m)) throw std::logic_error("extend_isometry: result fails its self-check");
  return f;
}

std::optional<Bijection> extend_isometry(const Space& space, const PartialMap& phi) {
  return extend_isometry(Analysis(space), phi);
}

bool is_homogeneous(const Analysis& an) { return is_transitive(an); }
bool is_homogeneous(const Space& space) { return is_transitive(space); }

PropertyH check_property_h(const Analysis& an) {
  PropertyH h{true, true};
  for (PointIndex p = 1; p < an.space().size(); ++p)
    if (an.spectrum_id(p) != an.spectrum_id(0)) h.h1 = false;
  std::map<Level, std::size_t> sons_at;
  for (const auto& node : an.nerve().nodes()) {
    if (node.is_leaf()) continue;
    auto [it, inserted] = sons_at.emplace(node.level, node.children.size());
    if (!inserted && it->second != node.children.size()) h.h2 = false;
  }
  return h;
}

PropertyH check_property_h(const Space& space) { return check_property_h(Analysis(space)); }

bool check_condition_A(const Analysis& an) {
  // Similar nerve nodes share a diameter and a point spectrum; all nodes
  // reached through one (diameter, spectrum) key must have one code.
  std::map<std::pair<Level, int>, int> code_of;
  const NerveTree& nerve = an.nerve();
  for (std::size_t i = 0; i < nerve.size(); ++i)
    for (PointIndex p : nerve.node(i).members) {
      auto [it, inserted] = code_of.emplace(std::make_pair(nerve.node(i).level, an.spectrum_id(p)), an.node_code(i));
      if (!inserted && it->second != an.node_code(i)) return false;
    }
  return true;
}

bool check_condition_A(const Space& space) { return check_condition_A(Analysis(space)); }

bool check_condition_B(const Analysis& an) {
  const Space& s = an.space();
  const NerveTree& nerve = an.nerve();
  const std::size_t top = s.values().size();  // radius index `top` stands for max + 1

  std::map<std::size_t, int> ms_id;  // nerve node -> interned restricted multispectrum
  std::map<std::vector<SpectrumSet>, int> ms_table;
  auto multispectrum_of = [&](std::size_t node) {
    auto it = ms_id.find(node);
    if (it != ms_id.end()) return it->second;
    auto ms = multispectrum_within(s, nerve.node(node).members);
    const int id = ms_table.try_emplace(std::move(ms), static_cast<int>(ms_table.size())).first->second;
    ms_id.emplace(node, id);
    return id;
  };

  // Open ball B(x, values[t]) is the largest node on x's chain below level t.
  std::map<std::tuple<std::size_t, Level, int>, int> seen;
  for (PointIndex x = 0; x < s.size(); ++x) {
    const auto chain = nerve.chain(x);
    std::size_t k = 0;
    for (std::size_t t = 1; t <= top; ++t) {
      while (k + 1 < chain.size() && nerve.node(chain[k + 1]).level < t) ++k;
      const std::size_t node = chain[k];
      const int ms = multispectrum_of(node);
      for (PointIndex p : nerve.node(node).members) {
        auto [it, inserted] = seen.emplace(std::make_tuple(t, nerve.node(node).level, an.spectrum_id(p)), ms);
        if (!inserted && it->second != ms) return false;
      }
    }
  }
  return true;
}

bool check_condition_B(const Space& space) { return check_condition_B(Analysis(space)); }

bool is_spec_homogeneous(const Analysis& an) { return check_condition_A(an); }
bool is_spec_homogeneous(const Space& space) { return check_condition_A(space); }

std::optional<PartialMap> spec_extension_step(const Analysis& an, const PartialMap& phi, PointIndex a) {
  const Space& s = an.space();
  const NerveTree& nerve = an.nerve();
  s.check_point(a);
  if (!check_spec_isometry(an, phi)) throw Error(ErrorKind::NotAnIsometry, "the map is not a local spec-isometry");
  for (const auto& [x, y] : phi)
    if (x == a) throw Error(ErrorKind::InvalidArgument, "point " + s.name(a) + " is already in the domain");

  PartialMap out = normalized(phi);
  if (out.empty()) {
    out.emplace_back(a, a);
    return out;
  }

  // r = d(a, F), reached first at a2.
  PointIndex a2 = out.front().first, a2_image = out.front().second;
  for (const auto& [x, y] : out)
    if (s.level(a, x) < s.level(a, a2)) a2 = x, a2_image = y;
  const Level r = s.level(a, a2);
  const std::size_t b = *nerve.node_at(a, r);
  const std::size_t b_img = *nerve.node_at(a2_image, r);
  if (an.node_code(b) != an.node_code(b_img))
    throw Error(ErrorKind::ConditionAViolated, "the balls of radius " + s.values()[r].str() + " around " + s.name(a) +
                                                   " and " + s.name(a2_image) + " are not isometric");
  std::vector<int> codes(nerve.size());
  for (std::size_t i = 0; i < nerve.size(); ++i) codes[i] = an.node_code(i);
  Bijection psi(s.size(), s.size());
  match_subtrees(nerve, codes, b, nerve, codes, b_img, psi);

  const std::size_t c = son_containing(nerve, b, a);
  const std::vector<Level> spec_c = local_spectrum(nerve, c, a);

  std::set<std::size_t> taken;       // phi_*[sons meeting F]
  std::set<std::size_t> candidates;  // psi_*[A+ and C]
  std::set<std::size_t> meeting;
  for (const auto& [x, y] : out) {
    if (s.level(a, x) > r) continue;
    const std::size_t son = son_containing(nerve, b, x);
    meeting.insert(son);
    taken.insert(son_containing(nerve, b_img, y));
  }
  auto psi_star = [&](std::size_t son) { return son_containing(nerve, b_img, psi[nerve.node(son).least()]); };
  for (std::size_t son : meeting) {
    const auto& members = nerve.node(son).members;
    if (std::any_of(members.begin(), members.end(), [&](PointIndex d) { return local_spectrum(nerve, son, d) == spec_c; }))
      candidates.insert(psi_star(son));
  }
  candidates.insert(psi_star(c));

  std::vector<std::size_t> free;
  for (std::size_t son : candidates)
    if (!taken.contains(son)) free.push_back(son);
  if (free.empty()) return std::nullopt;
  const std::size_t target = *std::min_element(free.begin(), free.end(), [&](std::size_t x, std::size_t y) {
    return nerve.node(x).least() < nerve.node(y).least();
  });
  for (PointIndex p : nerve.node(target).members)
    if (an.spectrum_id(p) == an.spectrum_id(a)) {
      out.emplace_back(a, p);
      std::sort(out.begin(), out.end());
      if (!check_spec_isometry(an, out)) throw std::logic_error("spec_extension_step: result is not a spec-isometry");
      return out;
    }
  return std::nullopt;
}

}  // namespace ultra
