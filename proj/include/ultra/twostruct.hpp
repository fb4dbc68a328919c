#ifndef ULTRA_TWOSTRUCT_HPP
#define ULTRA_TWOSTRUCT_HPP

// Symmetric labelled 2-structures: a set E with a label on every pair of
// distinct elements. Modules, strong and robust modules, decomposition tree.

#include "ultra/kernels.hpp"
#include "ultra/nerve.hpp"

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace ultra {

using ElementSet = PointSet;

class TwoStructure {
 public:
  /// Every unordered pair of distinct elements exactly once; labels are
  /// arbitrary rationals.
  static TwoStructure from_labels(std::vector<std::string> elements, std::span<const DistanceEntry> entries);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t e) const { return names_.at(e); }
  std::size_t index_of(std::string_view name) const;

  /// Label of a pair of distinct elements.
  const Rational& label(std::size_t x, std::size_t y) const { return values_[levels_[x * size() + y]]; }
  kernels::LabelMatrix matrix() const { return {size(), levels_}; }
  /// The space this structure was read from, if any.
  const std::optional<Space>& source() const noexcept { return source_; }

 private:
  friend TwoStructure from_space(const Space& space);
  TwoStructure() = default;

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  SpectrumSet values_;
  std::vector<Level> levels_;
  std::optional<Space> source_;
};

TwoStructure from_space(const Space& space);

/// Throws UnknownElement for indices outside E.
bool is_module(const TwoStructure& ts, const ElementSet& a);

/// Union of the open balls of radius diam(A) centred in A; A itself when A
/// is a singleton.
ElementSet least_module(const Space& space, const ElementSet& a);
/// Intersection of all modules containing A.
ElementSet least_module_brute_force(const TwoStructure& ts, const ElementSet& a, std::size_t bound = 12);

/// All modules (including the empty set), sorted. Throws TooLarge above bound.
std::vector<ElementSet> enumerate_modules(const TwoStructure& ts, std::size_t bound = 12);

/// Nonempty modules comparable with every module they meet, sorted. Uses
/// the ball formula when the structure comes from a space.
std::vector<ElementSet> strong_modules(const TwoStructure& ts);
std::vector<ElementSet> strong_modules_brute_force(const TwoStructure& ts, std::size_t bound = 12);

/// Least strong modules containing a pair of distinct elements, sorted.
std::vector<ElementSet> robust_modules(const TwoStructure& ts);
std::vector<ElementSet> robust_modules_brute_force(const TwoStructure& ts, std::size_t bound = 12);

struct DecompositionNode {
  ElementSet members;
  Rational label;  // 0 on singleton leaves
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;  // ordered by least member
};

/// Robust modules plus singleton leaves, ordered by (label descending, least
/// member) so that it lines up with the nerve.
struct DecompositionTree {
  std::vector<DecompositionNode> nodes;
};

DecompositionTree decomposition_tree(const TwoStructure& ts);

/// Same node sets, labels and parent links in the same order.
bool same_tree(const DecompositionTree& tree, const NerveTree& nerve);

/// Every substructure on at least three elements has a nontrivial module.
bool is_hereditary_decomposable(const TwoStructure& ts, std::size_t bound = 8);

}  // namespace ultra

#endif  // ULTRA_TWOSTRUCT_HPP
