#ifndef ULTRA_CODES_HPP
#define ULTRA_CODES_HPP

// Canonical codes of nerve subtrees. A code is an interned integer: two
// subtrees get the same id exactly when they carry the same diameters and
// the same multiset of child codes, i.e. when the balls are isometric.

#include "ultra/nerve.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace ultra {

using Bijection = std::vector<PointIndex>;  // image of every point, by index

class CodeTable {
 public:
  /// children must be sorted.
  int intern(const Rational& diameter, const std::vector<int>& children);
  /// Code of a subtree with one marked point: the marked child's pointed
  /// code plus the sorted codes of the other children.
  int intern_pointed(const Rational& diameter, int marked, const std::vector<int>& others);
  std::size_t size() const noexcept { return ids_.size() + pointed_.size(); }

 private:
  std::map<std::pair<Rational, std::vector<int>>, int> ids_;
  std::map<std::tuple<Rational, int, std::vector<int>>, int> pointed_;
  int next_ = 0;
};

/// Code of every nerve node, computed bottom-up.
std::vector<int> node_codes(const NerveTree& nerve, CodeTable& table);

struct CanonicalCode {
  std::string text;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Printable canonical form: "*" for a point, "(d:c1,c2,...)" with child
/// forms sorted, for a ball of diameter d.
CanonicalCode canonical_code(const Space& space);
CanonicalCode canonical_code(const Space& space, const NerveTree& nerve, std::size_t node);

/// A space with its nerve and codes computed once.
class Analysis {
 public:
  explicit Analysis(Space space);

  const Space& space() const noexcept { return space_; }
  const NerveTree& nerve() const noexcept { return nerve_; }
  int node_code(std::size_t node) const { return codes_.at(node); }
  const std::vector<int>& node_codes() const noexcept { return codes_; }
  /// Code of the whole space pointed at p; equal codes iff some
  /// self-isometry maps one point to the other.
  int pointed_code(PointIndex p) const { return pointed_.at(p).back(); }
  /// Equal ids iff equal spectra Spec(M, x).
  int spectrum_id(PointIndex p) const { return spectrum_ids_.at(p); }

 private:
  Space space_;
  NerveTree nerve_;
  CodeTable table_;
  std::vector<int> codes_;
  std::vector<std::vector<int>> pointed_;  // along each point's chain
  std::vector<int> spectrum_ids_;
};

/// Writes into `out` an isometry from the subtree u of `a` onto the subtree
/// v of `b`. Codes must come from one shared table and be equal at (u, v).
void match_subtrees(const NerveTree& a, const std::vector<int>& codes_a, std::size_t u, const NerveTree& b,
                    const std::vector<int>& codes_b, std::size_t v, Bijection& out);

}  // namespace ultra

#endif  // ULTRA_CODES_HPP
