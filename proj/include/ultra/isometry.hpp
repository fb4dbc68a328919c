#ifndef ULTRA_ISOMETRY_HPP
#define ULTRA_ISOMETRY_HPP

#include "ultra/codes.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ultra {

/// Partial map as (source point, target point) pairs.
using PartialMap = std::vector<std::pair<PointIndex, PointIndex>>;

/// d'(f(x), f(y)) = d(x, y) on the domain. Throws UnknownPoint.
bool check_partial_isometry(const Space& source, const Space& target, const PartialMap& map);
/// Partial self-isometry that also preserves every point's spectrum.
bool check_spec_isometry(const Analysis& analysis, const PartialMap& map);

std::optional<Bijection> isometric(const Space& a, const Space& b);

/// Injective isometry from a into b, by matching nerve subtrees.
std::optional<Bijection> find_subspace_embedding(const Space& a, const Space& b);

bool is_transitive(const Analysis& analysis);
bool is_transitive(const Space& space);

/// A self-isometry sending x to y, if any.
std::optional<Bijection> automorphism_mapping(const Analysis& analysis, PointIndex x, PointIndex y);

/// Extends a partial self-isometry to a surjective one. Throws NotAnIsometry
/// if the map does not preserve distances.
std::optional<Bijection> extend_isometry(const Analysis& analysis, const PartialMap& phi);
std::optional<Bijection> extend_isometry(const Space& space, const PartialMap& phi);

bool is_homogeneous(const Analysis& analysis);
bool is_homogeneous(const Space& space);

struct PropertyH {
  bool h1 = false;
  bool h2 = false;
  friend bool operator==(const PropertyH&, const PropertyH&) = default;
};
PropertyH check_property_h(const Analysis& analysis);
PropertyH check_property_h(const Space& space);

bool check_condition_A(const Analysis& analysis);
bool check_condition_A(const Space& space);
bool check_condition_B(const Analysis& analysis);
bool check_condition_B(const Space& space);

bool is_spec_homogeneous(const Analysis& analysis);
bool is_spec_homogeneous(const Space& space);

/// One forth step: extends a local spec-isometry to the point a. Throws
/// ConditionAViolated when the balls around a and its target are not
/// isometric; returns nullopt when no son is free for a.
std::optional<PartialMap> spec_extension_step(const Analysis& analysis, const PartialMap& phi, PointIndex a);

/// Bijection check plus distance preservation on every pair.
bool is_automorphism(const Space& space, const Bijection& f);
bool extends(const Bijection& f, const PartialMap& phi);

}  // namespace ultra

#endif  // ULTRA_ISOMETRY_HPP
