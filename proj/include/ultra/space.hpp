#ifndef ULTRA_SPACE_HPP
#define ULTRA_SPACE_HPP

#include "ultra/error.hpp"
#include "ultra/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ultra {

using PointIndex = std::size_t;

/// Sorted, duplicate-free list of point indices.
using PointSet = std::vector<PointIndex>;

/// Sorted, duplicate-free list of distance values.
using SpectrumSet = std::vector<Rational>;

/// Rank of a distance inside Space::values(); 0 is always the zero distance.
using Level = std::uint16_t;

struct DistanceEntry {
  std::string a;
  std::string b;
  Rational d;
};

struct TriangleTriple {
  PointIndex x, z, y;  // d(x,z) > max(d(x,y), d(y,z))
};

/// A finite ultrametric space with exact rational distances. Immutable once
/// built; the only way to obtain one is through a validating factory, so every
/// Space satisfies the strong triangle inequality.
class Space {
 public:
  static constexpr std::size_t max_points = 65535;

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(PointIndex p) const { return names_.at(p); }
  PointIndex index_of(std::string_view name) const;
  std::optional<PointIndex> find(std::string_view name) const;
  void check_point(PointIndex p) const;

  Level level(PointIndex x, PointIndex y) const noexcept { return levels_[x * names_.size() + y]; }
  const Rational& dist(PointIndex x, PointIndex y) const noexcept { return values_[level(x, y)]; }

  /// Spec(M): every distance value, ascending, always starting with 0.
  const SpectrumSet& values() const noexcept { return values_; }
  std::span<const Level> row(PointIndex x) const noexcept {
    return {levels_.data() + x * names_.size(), names_.size()};
  }

  /// Builds and validates a space from a dense distance function. Only pairs
  /// x < y are queried.
  static Space from_function(std::vector<std::string> names,
                             const std::function<Rational(PointIndex, PointIndex)>& dist);

  /// Validated construction from a value table and a dense level matrix.
  static Space from_levels(std::vector<std::string> names, SpectrumSet values, std::vector<Level> levels);

 private:
  Space() = default;
  void index_names();
  void check_ultrametric() const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, PointIndex> index_;
  SpectrumSet values_;
  std::vector<Level> levels_;
};

enum class Openness { Open, Closed };

/// "Kind" of a ball: its diameter and whether that diameter is attained.
struct Kind {
  Rational diameter;
  bool attained = true;
  friend bool operator==(const Kind&, const Kind&) = default;
};

struct Ball {
  PointSet members;
  Rational diameter;
  bool attained = true;
  Openness openness = Openness::Closed;

  Kind kind() const { return {diameter, attained}; }
  PointIndex least() const { return members.front(); }
  bool contains(PointIndex p) const;
  /// Balls are equal when their member sets are.
  friend bool operator==(const Ball& a, const Ball& b) { return a.members == b.members; }
};

/// Checks every pair once, positivity, and the strong triangle inequality.
Space validate_ultrametric(std::vector<std::string> points, std::span<const DistanceEntry> entries);

SpectrumSet spectrum_at(const Space& space, PointIndex a);
SpectrumSet spectrum(const Space& space);
std::vector<SpectrumSet> multispectrum(const Space& space);

/// Spec(M restricted to X, y) = {d(y,x) : x in X}.
SpectrumSet spectrum_within(const Space& space, PointIndex y, const PointSet& subset);
std::vector<SpectrumSet> multispectrum_within(const Space& space, const PointSet& subset);

Ball ball(const Space& space, PointIndex a, const Rational& r, Openness openness);
Rational diameter(const Space& space, const PointSet& subset);
/// Diameter as a level; subset must be nonempty.
Level diameter_level(const Space& space, const PointSet& subset);

/// Induced subspace, keeping point order and names.
Space restrict(const Space& space, const PointSet& subset);

/// Same distances, new point names (size must match, names unique).
Space rename(const Space& space, std::vector<std::string> names);

/// Sorts and dedups; throws UnknownPoint for out-of-range indices.
PointSet make_point_set(const Space& space, std::vector<PointIndex> points);
PointSet all_points(const Space& space);

}  // namespace ultra

#endif  // ULTRA_SPACE_HPP
