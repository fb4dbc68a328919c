#ifndef ULTRA_TESTS_ORACLES_HPP
#define ULTRA_TESTS_ORACLES_HPP

// Naive reference computations for the tests. They read distances through
// Space::dist only and share no code with the library algorithms.

#include "ultra/space.hpp"

#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Set = std::vector<std::size_t>;
using Perm = std::vector<std::size_t>;
using Map = std::vector<std::pair<std::size_t, std::size_t>>;
using Label = std::function<ultra::Rational(std::size_t, std::size_t)>;

/// First (x, z, y) in lexicographic order with d(x,z) > max(d(x,y), d(y,z)).
std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> triangle_violation(
    std::size_t n, const Label& d);

std::set<ultra::Rational> spectrum_at(const ultra::Space& s, std::size_t a);

/// Closed balls B(a, r), r in Spec(M, a), as member sets.
std::set<Set> nerve_sets(const ultra::Space& s);
/// All balls, open and closed, every center and radius that matters.
std::set<Set> all_balls(const ultra::Space& s);

ultra::Rational diameter(const ultra::Space& s, const Set& a);

/// Every distance-preserving permutation, by trying all n! orders.
std::vector<Perm> automorphisms(const ultra::Space& s);
bool isometric(const ultra::Space& a, const ultra::Space& b);
bool embeddable(const ultra::Space& a, const ultra::Space& b);

bool is_partial_isometry(const ultra::Space& s, const Map& m);
/// Every injective partial map from s to itself (not only isometries).
std::vector<Map> injective_partial_maps(std::size_t n);
bool extends_some(const std::vector<Perm>& group, const Map& m);

bool transitive(const ultra::Space& s);
/// Every partial isometry agrees with some automorphism.
bool homogeneous(const ultra::Space& s);
/// Every partial isometry preserving spectra agrees with some automorphism.
bool spec_homogeneous(const ultra::Space& s);

/// Subsets A with label(x, y) = label(x, y') for x outside A, y, y' in A.
std::vector<Set> modules(std::size_t n, const Label& v);
std::vector<Set> strong_modules(std::size_t n, const Label& v);

ultra::Space restrict(const ultra::Space& s, const Set& a);

}  // namespace oracle

#endif  // ULTRA_TESTS_ORACLES_HPP
