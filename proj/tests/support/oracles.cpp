#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

using ultra::Rational;
using ultra::Space;

std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> triangle_violation(std::size_t n, const Label& d) {
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = x + 1; z < n; ++z)
      for (std::size_t y = 0; y < n; ++y)
        if (d(x, z) > std::max(d(x, y), d(y, z))) return std::make_tuple(x, z, y);
  return std::nullopt;
}

std::set<Rational> spectrum_at(const Space& s, std::size_t a) {
  std::set<Rational> out;
  for (std::size_t x = 0; x < s.size(); ++x) out.insert(s.dist(a, x));
  return out;
}

std::set<Set> nerve_sets(const Space& s) {
  std::set<Set> out;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (const Rational& r : oracle::spectrum_at(s, a)) {
      Set b;
      for (std::size_t x = 0; x < s.size(); ++x)
        if (s.dist(a, x) <= r) b.push_back(x);
      out.insert(b);
    }
  return out;
}

std::set<Set> all_balls(const Space& s) {
  std::set<Rational> radii;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) radii.insert(s.dist(a, b));
  const Rational big(1000000);
  std::set<Set> out;
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (const Rational& r : radii) {
      Set closed, open;
      for (std::size_t x = 0; x < s.size(); ++x) {
        if (s.dist(a, x) <= r) closed.push_back(x);
        if (s.dist(a, x) < r) open.push_back(x);
      }
      out.insert(closed);
      if (!open.empty()) out.insert(open);
    }
    Set every(s.size());
    std::iota(every.begin(), every.end(), 0);
    out.insert(every);
  }
  return out;
}

Rational diameter(const Space& s, const Set& a) {
  Rational d(0);
  for (std::size_t x : a)
    for (std::size_t y : a) d = std::max(d, s.dist(x, y));
  return d;
}

std::vector<Perm> automorphisms(const Space& s) {
  Perm p(s.size());
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    bool ok = true;
    for (std::size_t x = 0; x < s.size() && ok; ++x)
      for (std::size_t y = x + 1; y < s.size() && ok; ++y) ok = s.dist(x, y) == s.dist(p[x], p[y]);
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool isometric(const Space& a, const Space& b) {
  if (a.size() != b.size()) return false;
  Perm p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t x = 0; x < a.size() && ok; ++x)
      for (std::size_t y = x + 1; y < a.size() && ok; ++y) ok = a.dist(x, y) == b.dist(p[x], p[y]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

namespace {

bool embed_from(const Space& a, const Space& b, std::size_t i, Perm& f, std::vector<char>& used) {
  if (i == a.size()) return true;
  for (std::size_t y = 0; y < b.size(); ++y) {
    if (used[y]) continue;
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j) ok = a.dist(i, j) == b.dist(y, f[j]);
    if (!ok) continue;
    used[y] = 1;
    f[i] = y;
    if (embed_from(a, b, i + 1, f, used)) return true;
    used[y] = 0;
  }
  return false;
}

void maps_from(std::size_t n, std::size_t i, Map& cur, std::vector<char>& used, std::vector<Map>& out) {
  if (i == n) {
    out.push_back(cur);
    return;
  }
  maps_from(n, i + 1, cur, used, out);
  for (std::size_t y = 0; y < n; ++y) {
    if (used[y]) continue;
    used[y] = 1;
    cur.emplace_back(i, y);
    maps_from(n, i + 1, cur, used, out);
    cur.pop_back();
    used[y] = 0;
  }
}

}  // namespace

bool embeddable(const Space& a, const Space& b) {
  Perm f(a.size());
  std::vector<char> used(b.size(), 0);
  return embed_from(a, b, 0, f, used);
}

bool is_partial_isometry(const Space& s, const Map& m) {
  for (const auto& [x, fx] : m)
    for (const auto& [y, fy] : m)
      if (s.dist(x, y) != s.dist(fx, fy)) return false;
  return true;
}

std::vector<Map> injective_partial_maps(std::size_t n) {
  std::vector<Map> out;
  Map cur;
  std::vector<char> used(n, 0);
  maps_from(n, 0, cur, used, out);
  return out;
}

bool extends_some(const std::vector<Perm>& group, const Map& m) {
  return std::any_of(group.begin(), group.end(), [&](const Perm& g) {
    return std::all_of(m.begin(), m.end(), [&](const auto& p) { return g[p.first] == p.second; });
  });
}

bool transitive(const Space& s) {
  std::vector<char> hit(s.size(), 0);
  for (const auto& g : automorphisms(s)) hit[g[0]] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool homogeneous(const Space& s) {
  const auto group = automorphisms(s);
  for (const auto& m : injective_partial_maps(s.size()))
    if (is_partial_isometry(s, m) && !extends_some(group, m)) return false;
  return true;
}

bool spec_homogeneous(const Space& s) {
  const auto group = automorphisms(s);
  for (const auto& m : injective_partial_maps(s.size())) {
    if (!is_partial_isometry(s, m)) continue;
    bool spec = true;
    for (const auto& [x, y] : m) spec = spec && oracle::spectrum_at(s, x) == oracle::spectrum_at(s, y);
    if (spec && !extends_some(group, m)) return false;
  }
  return true;
}

std::vector<Set> modules(std::size_t n, const Label& v) {
  std::vector<Set> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Set a;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) a.push_back(i);
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      if (mask >> x & 1) continue;
      for (std::size_t y : a)
        if (v(x, y) != v(x, a.front())) ok = false;
    }
    if (ok) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Set> strong_modules(std::size_t n, const Label& v) {
  const auto all = modules(n, v);
  std::vector<Set> out;
  for (const auto& m : all) {
    if (m.empty()) continue;
    bool strong = true;
    for (const auto& o : all) {
      Set common;
      std::set_intersection(m.begin(), m.end(), o.begin(), o.end(), std::back_inserter(common));
      if (!common.empty() && common != m && common != o) strong = false;
    }
    if (strong) out.push_back(m);
  }
  return out;
}

Space restrict(const Space& s, const Set& a) {
  std::vector<std::string> names;
  for (std::size_t x : a) names.push_back(s.name(x));
  return Space::from_function(names, [&](std::size_t i, std::size_t j) { return s.dist(a[i], a[j]); });
}

}  // namespace oracle
