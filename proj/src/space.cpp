#include "ultra/space.hpp"

#include "ultra/kernels.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <map>
#include <sstream>

namespace ultra {

namespace {

std::string describe_triple(const Space& s, const TriangleTriple& t) {
  std::ostringstream os;
  os << "(" << s.name(t.x) << ", " << s.name(t.z) << ", " << s.name(t.y) << "): d(" << s.name(t.x) << ","
     << s.name(t.z) << ") = " << s.dist(t.x, t.z) << " > max(d(" << s.name(t.x) << "," << s.name(t.y)
     << "), d(" << s.name(t.y) << "," << s.name(t.z) << ")) = " << std::max(s.dist(t.x, t.y), s.dist(t.y, t.z));
  return os.str();
}

// Walks the spanning-tree path from s to t (all edges shorter than d(s,t))
// and returns the first vertex whose distance to s reaches d(s,t), together
// with its predecessor on the path.
TriangleTriple triple_on_path(const kernels::LabelMatrix& m, const kernels::SpanningTree& tree, std::size_t s,
                              std::size_t t) {
  auto path_to_root = [&](std::size_t v) {
    std::vector<std::size_t> p{v};
    while (tree.parent[p.back()] != p.back()) p.push_back(tree.parent[p.back()]);
    return p;
  };
  auto up_s = path_to_root(s);
  auto up_t = path_to_root(t);
  while (up_s.size() > 1 && up_t.size() > 1 && up_s[up_s.size() - 2] == up_t[up_t.size() - 2]) {
    up_s.pop_back();
    up_t.pop_back();
  }
  std::vector<std::size_t> path(up_s.begin(), up_s.end());  // s ... lca
  for (auto it = up_t.rbegin() + 1; it != up_t.rend(); ++it) path.push_back(*it);
  const Level target = m.at(s, t);
  for (std::size_t i = 1; i < path.size(); ++i)
    if (m.at(s, path[i]) >= target) return {s, path[i], path[i - 1]};
  throw std::logic_error("spanning-tree path does not witness the violation");
}

}  // namespace

bool Ball::contains(PointIndex p) const { return std::binary_search(members.begin(), members.end(), p); }

PointIndex Space::index_of(std::string_view name) const {
  if (auto p = find(name)) return *p;
  throw Error(ErrorKind::UnknownPoint, "unknown point \"" + std::string(name) + "\"");
}

std::optional<PointIndex> Space::find(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Space::check_point(PointIndex p) const {
  if (p >= size()) throw Error(ErrorKind::UnknownPoint, "point index " + std::to_string(p) + " out of range");
}

void Space::index_names() {
  if (names_.empty()) throw Error(ErrorKind::InvalidArgument, "a space needs at least one point");
  if (names_.size() > max_points) throw Error(ErrorKind::TooLarge, "too many points");
  index_.clear();
  index_.reserve(names_.size());
  for (PointIndex i = 0; i < names_.size(); ++i)
    if (!index_.emplace(names_[i], i).second)
      throw Error(ErrorKind::DuplicatePoint, "duplicate point \"" + names_[i] + "\"");
}

void Space::check_ultrametric() const {
  const kernels::LabelMatrix m{size(), levels_};
  const auto tree = kernels::minimum_spanning_tree(m);
  if (auto bad = kernels::parallel::first_minimax_violation(m, tree)) {
    const auto triple = triple_on_path(m, tree, bad->first, bad->second);
    throw Error(ErrorKind::TriangleViolation, describe_triple(*this, triple));
  }
}

Space Space::from_levels(std::vector<std::string> names, SpectrumSet values, std::vector<Level> levels) {
  Space s;
  s.names_ = std::move(names);
  s.index_names();
  const std::size_t n = s.names_.size();
  if (levels.size() != n * n) throw Error(ErrorKind::InvalidArgument, "level matrix has the wrong size");
  if (values.empty() || !values.front().is_zero() || !std::is_sorted(values.begin(), values.end()) ||
      std::adjacent_find(values.begin(), values.end()) != values.end())
    throw Error(ErrorKind::InvalidArgument, "value table must be ascending, distinct and start at 0");
  for (std::size_t x = 0; x < n; ++x) {
    if (levels[x * n + x] != 0) throw Error(ErrorKind::InvalidArgument, "nonzero self-distance");
    for (std::size_t y = x + 1; y < n; ++y) {
      const Level l = levels[x * n + y];
      if (l != levels[y * n + x]) throw Error(ErrorKind::InvalidArgument, "asymmetric level matrix");
      if (l == 0 || l >= values.size())
        throw Error(ErrorKind::NonPositiveDistance, "pair (" + s.names_[x] + ", " + s.names_[y] + ")");
    }
  }
  // Drop values no pair uses, so values() is exactly Spec(M).
  std::vector<char> used(values.size(), 0);
  used[0] = 1;
  for (Level l : levels) used[l] = 1;
  std::vector<Level> remap(values.size(), 0);
  for (std::size_t i = 0; i < values.size(); ++i)
    if (used[i]) {
      remap[i] = static_cast<Level>(s.values_.size());
      s.values_.push_back(values[i]);
    }
  for (Level& l : levels) l = remap[l];
  s.levels_ = std::move(levels);
  s.check_ultrametric();
  return s;
}

Space Space::from_function(std::vector<std::string> names,
                           const std::function<Rational(PointIndex, PointIndex)>& dist) {
  const std::size_t n = names.size();
  std::vector<Rational> raw(n * n);
  SpectrumSet values{Rational(0)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      const Rational d = dist(x, y);
      if (!d.is_positive())
        throw Error(ErrorKind::NonPositiveDistance,
                    "d(" + names[x] + ", " + names[y] + ") = " + d.str() + " is not positive");
      raw[x * n + y] = d;
      values.push_back(d);
    }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.size() > std::numeric_limits<Level>::max()) throw Error(ErrorKind::TooLarge, "too many distances");
  std::vector<Level> levels(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      const auto l = static_cast<Level>(std::lower_bound(values.begin(), values.end(), raw[x * n + y]) - values.begin());
      levels[x * n + y] = l;
      levels[y * n + x] = l;
    }
  return from_levels(std::move(names), std::move(values), std::move(levels));
}

Space validate_ultrametric(std::vector<std::string> points, std::span<const DistanceEntry> entries) {
  if (points.empty()) throw Error(ErrorKind::InvalidArgument, "a space needs at least one point");
  std::unordered_map<std::string, PointIndex> index;
  for (PointIndex i = 0; i < points.size(); ++i)
    if (!index.emplace(points[i], i).second)
      throw Error(ErrorKind::DuplicatePoint, "duplicate point \"" + points[i] + "\"");
  const std::size_t n = points.size();
  auto lookup = [&](const std::string& name) {
    const auto it = index.find(name);
    if (it == index.end()) throw Error(ErrorKind::UnknownPoint, "unknown point \"" + name + "\"");
    return it->second;
  };
  std::vector<std::optional<Rational>> matrix(n * n);
  for (const auto& e : entries) {
    const PointIndex a = lookup(e.a);
    const PointIndex b = lookup(e.b);
    if (a == b) throw Error(ErrorKind::SelfPair, "entry pairs \"" + e.a + "\" with itself");
    if (!e.d.is_positive())
      throw Error(ErrorKind::NonPositiveDistance, "d(" + e.a + ", " + e.b + ") = " + e.d.str() + " is not positive");
    const auto x = std::min(a, b);
    const auto y = std::max(a, b);
    if (matrix[x * n + y]) throw Error(ErrorKind::DuplicatePair, "pair (" + e.a + ", " + e.b + ") given twice");
    matrix[x * n + y] = e.d;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (!matrix[x * n + y])
        throw Error(ErrorKind::MissingPair, "no distance for pair (" + points[x] + ", " + points[y] + ")");
  return Space::from_function(std::move(points), [&](PointIndex x, PointIndex y) { return *matrix[x * n + y]; });
}

SpectrumSet spectrum_at(const Space& space, PointIndex a) {
  space.check_point(a);
  std::vector<char> seen(space.values().size(), 0);
  for (Level l : space.row(a)) seen[l] = 1;
  SpectrumSet out;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) out.push_back(space.values()[i]);
  return out;
}

SpectrumSet spectrum(const Space& space) { return space.values(); }

std::vector<SpectrumSet> multispectrum(const Space& space) { return multispectrum_within(space, all_points(space)); }

SpectrumSet spectrum_within(const Space& space, PointIndex y, const PointSet& subset) {
  space.check_point(y);
  std::vector<char> seen(space.values().size(), 0);
  for (PointIndex x : subset) {
    space.check_point(x);
    seen[space.level(y, x)] = 1;
  }
  SpectrumSet out;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) out.push_back(space.values()[i]);
  return out;
}

std::vector<SpectrumSet> multispectrum_within(const Space& space, const PointSet& subset) {
  std::vector<SpectrumSet> out;
  out.reserve(subset.size());
  for (PointIndex y : subset) out.push_back(spectrum_within(space, y, subset));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Ball ball(const Space& space, PointIndex a, const Rational& r, Openness openness) {
  space.check_point(a);
  if (openness == Openness::Open ? !r.is_positive() : r < Rational(0))
    throw Error(ErrorKind::EmptyBall, "ball of radius " + r.str() + " around \"" + space.name(a) + "\" is empty");
  Ball b;
  b.openness = openness;
  for (PointIndex x = 0; x < space.size(); ++x) {
    const Rational& d = space.dist(a, x);
    if (openness == Openness::Open ? d < r : d <= r) b.members.push_back(x);
  }
  b.diameter = diameter(space, b.members);
  b.attained = true;
  return b;
}

Level diameter_level(const Space& space, const PointSet& subset) {
  if (subset.empty()) throw Error(ErrorKind::EmptySubset, "diameter of an empty set");
  // In an ultrametric space the diameter is the largest distance from any
  // single member.
  Level best = 0;
  const PointIndex base = subset.front();
  for (PointIndex x : subset) {
    space.check_point(x);
    best = std::max(best, space.level(base, x));
  }
  return best;
}

Rational diameter(const Space& space, const PointSet& subset) {
  return space.values()[diameter_level(space, subset)];
}

Space restrict(const Space& space, const PointSet& subset) {
  if (subset.empty()) throw Error(ErrorKind::EmptySubset, "restriction to an empty set");
  std::vector<std::string> names;
  names.reserve(subset.size());
  for (PointIndex p : subset) {
    space.check_point(p);
    names.push_back(space.name(p));
  }
  const std::size_t k = subset.size();
  std::vector<Level> levels(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) levels[i * k + j] = space.level(subset[i], subset[j]);
  return Space::from_levels(std::move(names), space.values(), std::move(levels));
}

Space rename(const Space& space, std::vector<std::string> names) {
  if (names.size() != space.size()) throw Error(ErrorKind::InvalidArgument, "rename needs one name per point");
  const std::size_t n = space.size();
  std::vector<Level> levels(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) levels[i * n + j] = space.level(i, j);
  return Space::from_levels(std::move(names), space.values(), std::move(levels));
}

PointSet make_point_set(const Space& space, std::vector<PointIndex> points) {
  for (PointIndex p : points) space.check_point(p);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

PointSet all_points(const Space& space) {
  PointSet out(space.size());
  for (PointIndex i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

}  // namespace ultra
