#include "ultra/funcspace.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ultra {

DegreeFunction::DegreeFunction(std::map<Rational, std::size_t> s) : s_(std::move(s)) {
  for (const auto& [r, k] : s_) {
    if (r <= Rational(0)) throw Error(ErrorKind::InvalidArgument, "radius " + r.str() + " must be positive");
    if (k < 2) throw Error(ErrorKind::InvalidArgument, "s(" + r.str() + ") = " + std::to_string(k) + " must be at least 2");
  }
}

DegreeFunction DegreeFunction::parse(std::string_view text) {
  std::map<Rational, std::size_t> s;
  if (text.empty()) return DegreeFunction();
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(start, end - start);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorKind::Parse, "expected r:k in \"" + std::string(item) + "\"");
    const Rational r = Rational::parse(item.substr(0, colon));
    const std::string_view count = item.substr(colon + 1);
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), k);
    if (ec != std::errc() || ptr != count.data() + count.size() || count.empty())
      throw Error(ErrorKind::Parse, "bad son count \"" + std::string(count) + "\"");
    if (!s.emplace(r, k).second) throw Error(ErrorKind::Parse, "radius " + r.str() + " given twice");
    start = end + 1;
  }
  return DegreeFunction(std::move(s));
}

SpectrumSet DegreeFunction::v_star() const {
  SpectrumSet out;
  for (const auto& kv : s_) out.push_back(kv.first);
  return out;
}

std::size_t DegreeFunction::at(const Rational& r) const {
  auto it = s_.find(r);
  if (it == s_.end()) throw Error(ErrorKind::InvalidArgument, "radius " + r.str() + " is not in V*");
  return it->second;
}

std::size_t DegreeFunction::product_size() const {
  std::size_t total = 1;
  for (const auto& kv : s_) {
    if (total > std::numeric_limits<std::size_t>::max() / kv.second) return std::numeric_limits<std::size_t>::max();
    total *= kv.second;
  }
  return total;
}

std::string DegreeFunction::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [r, k] : s_) {
    out += (first ? "" : ", ") + r.str() + ": " + std::to_string(k);
    first = false;
  }
  return out + "}";
}

FinSupportPoint::FinSupportPoint(std::shared_ptr<const DegreeFunction> df, std::map<Rational, std::size_t> values)
    : df_(std::move(df)) {
  if (!df_) throw Error(ErrorKind::InvalidArgument, "missing degree function");
  for (const auto& [r, v] : values) {
    if (v >= df_->at(r))
      throw Error(ErrorKind::InvalidArgument, "value " + std::to_string(v) + " at " + r.str() + " exceeds s(r)");
    if (v != 0) values_.emplace(r, v);
  }
}

std::size_t FinSupportPoint::at(const Rational& r) const {
  auto it = values_.find(r);
  return it == values_.end() ? 0 : it->second;
}

SpectrumSet FinSupportPoint::support() const {
  SpectrumSet out;
  for (const auto& kv : values_) out.push_back(kv.first);
  return out;
}

std::string FinSupportPoint::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [r, v] : values_) {
    out += (first ? "" : ", ") + r.str() + ": " + std::to_string(v);
    first = false;
  }
  return out + "}";
}

namespace {

void same_space(const FinSupportPoint& f, const FinSupportPoint& g) {
  const auto& a = f.degree_function();
  const auto& b = g.degree_function();
  if (a == b) return;
  if (a && b && *a == *b) return;
  throw Error(ErrorKind::MismatchedDegreeFunction, "points come from different function spaces");
}

}  // namespace

SpectrumSet delta(const FinSupportPoint& f, const FinSupportPoint& g) {
  same_space(f, g);
  SpectrumSet out;
  auto i = f.values().begin();
  auto j = g.values().begin();
  while (i != f.values().end() || j != g.values().end()) {
    if (j == g.values().end() || (i != f.values().end() && i->first < j->first)) {
      out.push_back(i++->first);
    } else if (i == f.values().end() || j->first < i->first) {
      out.push_back(j++->first);
    } else {
      if (i->second != j->second) out.push_back(i->first);
      ++i;
      ++j;
    }
  }
  return out;
}

Rational fs_distance(const FinSupportPoint& f, const FinSupportPoint& g) {
  const auto d = delta(f, g);
  return d.empty() ? Rational(0) : d.back();
}

FinSupportPoint sigma_apply(const SigmaFamily& sigma, const FinSupportPoint& f) {
  const auto& df = f.degree_function();
  if (!df) throw Error(ErrorKind::InvalidArgument, "missing degree function");
  for (const auto& [r, perm] : sigma.per_radius) {
    if (!df->contains(r)) throw Error(ErrorKind::PermutationOutOfRange, "no radius " + r.str() + " in V*");
    const std::size_t k = df->at(r);
    std::vector<char> hit(k, 0);
    if (perm.size() != k)
      throw Error(ErrorKind::PermutationOutOfRange, "permutation at " + r.str() + " must have " + std::to_string(k) + " entries");
    for (std::size_t v : perm) {
      if (v >= k || hit[v]) throw Error(ErrorKind::PermutationOutOfRange, "not a permutation at " + r.str());
      hit[v] = 1;
    }
  }
  std::map<Rational, std::size_t> out;
  for (const auto& [r, k] : df->values()) {
    const std::size_t v = f.at(r);
    auto it = sigma.per_radius.find(r);
    out.emplace(r, it == sigma.per_radius.end() ? v : it->second[v]);
  }
  return FinSupportPoint(df, std::move(out));
}

SigmaFamily transitivity_witness(const FinSupportPoint& f, const FinSupportPoint& g) {
  SigmaFamily sigma;
  for (const Rational& r : delta(f, g)) {
    std::vector<std::size_t> perm(f.degree_function()->at(r));
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::swap(perm[f.at(r)], perm[g.at(r)]);
    sigma.per_radius.emplace(r, std::move(perm));
  }
  return sigma;
}

Product materialize_product(const DegreeFunction& df, std::size_t bound) {
  const std::size_t total = df.product_size();
  if (total > bound)
    throw Error(ErrorKind::ProductTooLarge,
                "product has " + (total == std::numeric_limits<std::size_t>::max() ? std::string("too many")
                                                                                   : std::to_string(total)) +
                    " points, bound is " + std::to_string(bound));
  if (total > Space::max_points) throw Error(ErrorKind::ProductTooLarge, "product exceeds the space size limit");

  auto shared = std::make_shared<const DegreeFunction>(df);
  SpectrumSet radii = df.v_star();
  std::reverse(radii.begin(), radii.end());  // most significant first
  const std::size_t k = radii.size();
  std::vector<std::size_t> radix(k);
  for (std::size_t i = 0; i < k; ++i) radix[i] = df.at(radii[i]);

  std::vector<std::vector<std::size_t>> digits(total, std::vector<std::size_t>(k));
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = k; i-- > 0;) {
      digits[idx][i] = rest % radix[i];
      rest /= radix[i];
    }
  }

  Product out{Space::from_levels({"()"}, {Rational(0)}, {0}), {}};
  std::vector<std::string> names;
  names.reserve(total);
  out.points.reserve(total);
  for (const auto& d : digits) {
    std::string name = "(";
    std::map<Rational, std::size_t> values;
    for (std::size_t i = 0; i < k; ++i) {
      name += (i ? "," : "") + std::to_string(d[i]);
      values.emplace(radii[i], d[i]);
    }
    names.push_back(name + ")");
    out.points.emplace_back(shared, std::move(values));
  }

  // Levels: 0 for the diagonal, otherwise the rank of the first differing radius.
  SpectrumSet values{Rational(0)};
  for (auto it = radii.rbegin(); it != radii.rend(); ++it) values.push_back(*it);
  std::vector<Level> levels(total * total, 0);
  for (std::size_t x = 0; x < total; ++x)
    for (std::size_t y = 0; y < total; ++y) {
      if (x == y) continue;
      std::size_t i = 0;
      while (digits[x][i] == digits[y][i]) ++i;
      levels[x * total + y] = static_cast<Level>(k - i);
    }
  out.space = Space::from_levels(std::move(names), std::move(values), std::move(levels));
  return out;
}

DegreeFunction degree_function_of(const Space& space) {
  const auto seq = degree_sequence(space);
  return DegreeFunction(std::map<Rational, std::size_t>(seq.per_radius.begin(), seq.per_radius.end()));
}

Embedding embed_space(const Space& space) {
  const NerveTree nerve = build_nerve(space);
  const auto seq = degree_sequence(space, nerve);
  auto df = std::make_shared<const DegreeFunction>(std::map<Rational, std::size_t>(seq.per_radius.begin(), seq.per_radius.end()));
  const std::size_t n = space.size();
  const auto& values = space.values();

  // Stage 1: recursion over the point order, values kept per level.
  std::vector<std::vector<std::size_t>> phi(n, std::vector<std::size_t>(values.size(), 0));
  for (PointIndex a = 1; a < n; ++a) {
    Level r = std::numeric_limits<Level>::max();
    PointIndex nearest = 0;
    for (PointIndex b = 0; b < a; ++b)
      if (space.level(a, b) < r) r = space.level(a, b), nearest = b;
    // d(a, earlier points) is a minimum over a finite set, so it is attained.
    if (r == std::numeric_limits<Level>::max()) throw std::logic_error("embed_space: unattained distance");
    for (std::size_t l = r + 1; l < values.size(); ++l) phi[a][l] = phi[nearest][l];
    std::vector<char> used(n + 1, 0);
    for (PointIndex b = 0; b < a; ++b)
      if (space.level(a, b) == r && phi[b][r] <= n) used[phi[b][r]] = 1;
    std::size_t mex = 0;
    while (used[mex]) ++mex;
    phi[a][r] = mex;
  }

  // Stage 2: relabel each ball's values at its diameter by the order
  // isomorphism onto {0, ..., s(B) - 1}; radii outside Spec(M, x) go to 0.
  std::vector<std::vector<std::size_t>> psi(n, std::vector<std::size_t>(values.size(), 0));
  for (std::size_t id = 0; id < nerve.size(); ++id) {
    const auto& node = nerve.node(id);
    if (node.is_leaf()) continue;
    std::vector<std::size_t> seen;
    for (PointIndex x : node.members) seen.push_back(phi[x][node.level]);
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (PointIndex x : node.members)
      psi[x][node.level] = static_cast<std::size_t>(std::lower_bound(seen.begin(), seen.end(), phi[x][node.level]) - seen.begin());
  }

  Embedding out;
  out.df = df;
  auto to_point = [&](const std::vector<std::size_t>& row) {
    std::map<Rational, std::size_t> m;
    for (std::size_t l = 1; l < values.size(); ++l)
      if (row[l] != 0) m.emplace(values[l], row[l]);
    return m;
  };
  // First-stage labels can reach the number of earlier points.
  std::map<Rational, std::size_t> wide;
  for (std::size_t l = 1; l < values.size(); ++l) wide.emplace(values[l], std::max<std::size_t>(n + 1, 2));
  auto wide_df = std::make_shared<const DegreeFunction>(std::move(wide));
  for (PointIndex x = 0; x < n; ++x) {
    out.initial.emplace_back(wide_df, to_point(phi[x]));
    out.image.emplace_back(df, to_point(psi[x]));
  }
  return out;
}

FeinbergResult verify_feinberg(const Space& space, std::size_t bound) {
  FeinbergResult res;
  res.h = check_property_h(space);
  const Embedding e = embed_space(space);
  const std::size_t total = e.df->product_size();
  res.surjective = total == space.size();
  if (res.surjective) {
    const Product prod = materialize_product(*e.df, bound);
    Bijection f(space.size(), space.size());
    std::vector<char> hit(space.size(), 0);
    for (PointIndex x = 0; x < space.size(); ++x) {
      auto it = std::find(prod.points.begin(), prod.points.end(), e.image[x]);
      if (it == prod.points.end()) throw std::logic_error("verify_feinberg: image point outside the product");
      f[x] = static_cast<PointIndex>(it - prod.points.begin());
      if (hit[f[x]]) throw std::logic_error("verify_feinberg: embedding is not injective");
      hit[f[x]] = 1;
    }
    PartialMap graph;
    for (PointIndex x = 0; x < f.size(); ++x) graph.emplace_back(x, f[x]);
    if (!check_partial_isometry(space, prod.space, graph)) throw std::logic_error("verify_feinberg: bijection is not an isometry");
    res.bijection = std::move(f);
  }
  res.holds = (res.h.h1 && res.h.h2) == res.surjective;
  return res;
}

}  // namespace ultra
