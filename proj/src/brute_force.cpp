#include "ultra/brute_force.hpp"

#include "ultra/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace ultra {

namespace {

void gate(const Space& space, std::size_t limit, const char* what) {
  if (space.size() > limit)
    throw Error(ErrorKind::TooLarge, std::string(what) + " is limited to " + std::to_string(limit) + " points, got " +
                                         std::to_string(space.size()));
}

void automorphisms_from(const Space& s, std::size_t i, Bijection& f, std::vector<char>& used,
                        std::vector<Bijection>& out) {
  const std::size_t n = s.size();
  if (i == n) {
    out.push_back(f);
    return;
  }
  for (PointIndex y = 0; y < n; ++y) {
    if (used[y]) continue;
    bool ok = true;
    for (PointIndex j = 0; j < i && ok; ++j) ok = s.level(i, j) == s.level(y, f[j]);
    if (!ok) continue;
    used[y] = 1;
    f[i] = y;
    automorphisms_from(s, i + 1, f, used, out);
    used[y] = 0;
  }
}

void partials_from(const Analysis& an, bool spec, std::size_t i, PartialMap& cur, std::vector<char>& used,
                   std::vector<PartialMap>& out) {
  const Space& s = an.space();
  if (i == s.size()) {
    out.push_back(cur);
    return;
  }
  partials_from(an, spec, i + 1, cur, used, out);
  for (PointIndex y = 0; y < s.size(); ++y) {
    if (used[y]) continue;
    if (spec && an.spectrum_id(i) != an.spectrum_id(y)) continue;
    bool ok = true;
    for (const auto& [x, fx] : cur)
      if (s.level(i, x) != s.level(y, fx)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    used[y] = 1;
    cur.emplace_back(i, y);
    partials_from(an, spec, i + 1, cur, used, out);
    cur.pop_back();
    used[y] = 0;
  }
}

}  // namespace

std::vector<Bijection> enumerate_automorphisms(const Space& space, std::size_t limit) {
  gate(space, limit, "automorphism enumeration");
  std::vector<Bijection> out;
  Bijection f(space.size());
  std::vector<char> used(space.size(), 0);
  automorphisms_from(space, 0, f, used, out);
  return out;
}

std::vector<PartialMap> enumerate_partial_isometries(const Analysis& an, std::size_t limit, bool spec_preserving) {
  gate(an.space(), limit, "partial isometry enumeration");
  std::vector<PartialMap> out;
  PartialMap cur;
  std::vector<char> used(an.space().size(), 0);
  partials_from(an, spec_preserving, 0, cur, used, out);
  return out;
}

bool is_transitive_brute_force(const Space& space, std::size_t limit) {
  const auto group = enumerate_automorphisms(space, limit);
  std::vector<char> reached(space.size(), 0);
  for (const auto& f : group) reached[f[0]] = 1;
  return std::all_of(reached.begin(), reached.end(), [](char c) { return c != 0; });
}

bool is_homogeneous_brute_force(const Analysis& an, BruteForceLimits limits) {
  const auto maps = enumerate_partial_isometries(an, limits.partial_maps);
  const auto group = enumerate_automorphisms(an.space(), limits.automorphisms);
  const auto flags = kernels::parallel::extendable_flags(group, maps);
  bool all = true;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const bool built = extend_isometry(an, maps[i]).has_value();
    if (built != (flags[i] != 0)) throw std::logic_error("extend_isometry disagrees with exhaustive search");
    all = all && flags[i];
  }
  return all;
}

bool is_spec_homogeneous_brute_force(const Analysis& an, BruteForceLimits limits) {
  const Space& s = an.space();
  const auto maps = enumerate_partial_isometries(an, limits.partial_maps, true);
  const auto group = enumerate_automorphisms(s, limits.automorphisms);
  const auto flags = kernels::parallel::extendable_flags(group, maps);
  const bool all = std::all_of(flags.begin(), flags.end(), [](char c) { return c != 0; });
  const bool cond_a = check_condition_A(an);
  if (all != cond_a) throw std::logic_error("spec-homogeneity disagrees with condition (A)");
  if (!cond_a) return all;

  for (const auto& phi : maps) {
    PartialMap cur = phi;
    std::vector<char> in_domain(s.size(), 0);
    for (const auto& p : phi) in_domain[p.first] = 1;
    for (PointIndex a = 0; a < s.size(); ++a) {
      if (in_domain[a]) continue;
      auto next = spec_extension_step(an, cur, a);
      if (!next) throw std::logic_error("spec_extension_step found no target under condition (A)");
      cur = std::move(*next);
    }
    Bijection f(s.size());
    for (const auto& [x, y] : cur) f[x] = y;
    if (!is_automorphism(s, f) || !extends(f, phi)) throw std::logic_error("spec extension chain is not an automorphism");
  }
  return all;
}

}  // namespace ultra
