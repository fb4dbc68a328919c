#ifndef ULTRA_FUNCSPACE_HPP
#define ULTRA_FUNCSPACE_HPP

// Finitely supported functions V* -> N with f(r) < s(r), at distance
// max{r : f(r) != g(r)}.

#include "ultra/isometry.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ultra {

class DegreeFunction {
 public:
  DegreeFunction() = default;
  /// Throws InvalidArgument for r <= 0 or s(r) < 2.
  explicit DegreeFunction(std::map<Rational, std::size_t> s);
  /// "1/2:2,1:3"
  static DegreeFunction parse(std::string_view text);

  const std::map<Rational, std::size_t>& values() const noexcept { return s_; }
  SpectrumSet v_star() const;
  std::size_t at(const Rational& r) const;
  bool contains(const Rational& r) const { return s_.contains(r); }
  /// Product of all s(r), saturating at SIZE_MAX.
  std::size_t product_size() const;
  std::string str() const;

  friend bool operator==(const DegreeFunction&, const DegreeFunction&) = default;

 private:
  std::map<Rational, std::size_t> s_;
};

class FinSupportPoint {
 public:
  FinSupportPoint() = default;
  /// Zero values are dropped; throws InvalidArgument for r not in V* or a
  /// value >= s(r).
  FinSupportPoint(std::shared_ptr<const DegreeFunction> df, std::map<Rational, std::size_t> values);

  const std::map<Rational, std::size_t>& values() const noexcept { return values_; }
  std::size_t at(const Rational& r) const;
  const std::shared_ptr<const DegreeFunction>& degree_function() const noexcept { return df_; }
  /// Keys of the map.
  SpectrumSet support() const;
  /// "{1/2: 1, 1: 2}" with keys ascending.
  std::string str() const;

  friend bool operator==(const FinSupportPoint& a, const FinSupportPoint& b) { return a.values_ == b.values_; }

 private:
  std::shared_ptr<const DegreeFunction> df_;
  std::map<Rational, std::size_t> values_;
};

/// Permutation of {0..s(r)-1} per radius; identity where omitted.
struct SigmaFamily {
  std::map<Rational, std::vector<std::size_t>> per_radius;
};

SpectrumSet delta(const FinSupportPoint& f, const FinSupportPoint& g);
Rational fs_distance(const FinSupportPoint& f, const FinSupportPoint& g);
FinSupportPoint sigma_apply(const SigmaFamily& sigma, const FinSupportPoint& f);
SigmaFamily transitivity_witness(const FinSupportPoint& f, const FinSupportPoint& g);

struct Product {
  Space space;
  std::vector<FinSupportPoint> points;  // same order as space points
};

/// The full product, points in lexicographic order of their value vectors
/// read from the largest radius down. Throws ProductTooLarge above `bound`.
Product materialize_product(const DegreeFunction& df, std::size_t bound = 4096);

struct Embedding {
  std::shared_ptr<const DegreeFunction> df;  // V = Spec(M), s = s_M
  std::vector<FinSupportPoint> initial;      // first stage, before relabelling
  std::vector<FinSupportPoint> image;        // final map
};

/// Degree function of a space: Spec(M) \ {0} with the son counts. Throws
/// InvalidArgument for a one-point space only through DegreeFunction rules
/// (it is empty there).
DegreeFunction degree_function_of(const Space& space);

Embedding embed_space(const Space& space);

struct FeinbergResult {
  bool holds = false;
  PropertyH h;
  bool surjective = false;
  std::optional<Bijection> bijection;  // space point -> product point, when surjective
};

FeinbergResult verify_feinberg(const Space& space, std::size_t bound = 4096);

}  // namespace ultra

#endif  // ULTRA_FUNCSPACE_HPP
