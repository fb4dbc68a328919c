#ifndef ULTRA_NERVE_HPP
#define ULTRA_NERVE_HPP

#include "ultra/space.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace ultra {

struct NerveNode {
  PointSet members;
  Rational diameter;
  Level level = 0;                    // diameter as a level of the space
  std::optional<std::size_t> parent;  // none for the root
  std::vector<std::size_t> children;  // ordered by least member

  bool is_leaf() const { return members.size() == 1; }
  PointIndex least() const { return members.front(); }
  Ball as_ball() const { return Ball{members, diameter, true, Openness::Closed}; }
};

/// The closed balls B(a, r) with r in Spec(M, a), deduplicated by member set,
/// ordered by (diameter descending, least member). Node 0 is the whole space;
/// the leaves are exactly the singletons.
class NerveTree {
 public:
  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t root() const noexcept { return 0; }
  const std::vector<NerveNode>& nodes() const noexcept { return nodes_; }
  const NerveNode& node(std::size_t i) const { return nodes_.at(i); }

  std::size_t leaf(PointIndex p) const { return chains_.at(p).front(); }
  /// Nodes containing p, from its leaf up to the root.
  std::span<const std::size_t> chain(PointIndex p) const { return chains_.at(p); }
  /// The node containing p with the given diameter level, if there is one.
  std::optional<std::size_t> node_at(PointIndex p, Level level) const;
  /// Smallest node containing every point of a nonempty set.
  std::size_t smallest_containing(const Space& space, const PointSet& points) const;
  std::optional<std::size_t> find(const PointSet& members) const;

 private:
  friend NerveTree build_nerve(const Space& space);
  std::vector<NerveNode> nodes_;
  std::vector<std::vector<std::size_t>> chains_;
};

NerveTree build_nerve(const Space& space);

/// Open balls of radius diam(B) inside B, ordered by least member.
std::vector<Ball> sons(const Space& space, const Ball& b);

struct DegreeSequence {
  std::map<std::size_t, std::size_t> per_ball;  // nontrivial nerve node -> number of sons
  std::map<Rational, std::size_t> per_radius;   // r in Spec(M) \ {0} -> max over diameter-r nodes
};

DegreeSequence degree_sequence(const Space& space, const NerveTree& nerve);
DegreeSequence degree_sequence(const Space& space);

/// {diam(B) : X subset of B, B in the nerve}, ascending.
SpectrumSet past(const Space& space, const NerveTree& nerve, const PointSet& subset);

/// Same kind and some x in B, x' in B' with Spec(M,x) = Spec(M,x').
bool similar_by_spectra(const Space& space, const Ball& b, const Ball& other);
/// Same past and intersecting multispectra of the two restrictions.
bool similar_by_past(const Space& space, const NerveTree& nerve, const Ball& b, const Ball& other);
/// Evaluates both criteria and throws std::logic_error if they disagree.
bool similar(const Space& space, const NerveTree& nerve, const Ball& b, const Ball& other);

}  // namespace ultra

#endif  // ULTRA_NERVE_HPP
