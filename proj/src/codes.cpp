#include "ultra/codes.hpp"

#include <algorithm>
#include <stdexcept>

namespace ultra {

int CodeTable::intern(const Rational& diameter, const std::vector<int>& children) {
  auto [it, inserted] = ids_.try_emplace({diameter, children}, next_);
  if (inserted) ++next_;
  return it->second;
}

int CodeTable::intern_pointed(const Rational& diameter, int marked, const std::vector<int>& others) {
  auto [it, inserted] = pointed_.try_emplace({diameter, marked, others}, next_);
  if (inserted) ++next_;
  return it->second;
}

std::vector<int> node_codes(const NerveTree& nerve, CodeTable& table) {
  std::vector<int> codes(nerve.size());
  // Children always come after their parent in node order.
  for (std::size_t i = nerve.size(); i-- > 0;) {
    const auto& node = nerve.node(i);
    std::vector<int> kids;
    kids.reserve(node.children.size());
    for (std::size_t c : node.children) kids.push_back(codes[c]);
    std::sort(kids.begin(), kids.end());
    codes[i] = table.intern(node.diameter, kids);
  }
  return codes;
}

CanonicalCode canonical_code(const Space& space, const NerveTree& nerve, std::size_t node) {
  std::vector<std::string> text(nerve.size());
  for (std::size_t i = nerve.size(); i-- > 0;) {
    const auto& n = nerve.node(i);
    if (n.is_leaf()) {
      text[i] = "*";
      continue;
    }
    std::vector<std::string> kids;
    for (std::size_t c : n.children) kids.push_back(std::move(text[c]));
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + n.diameter.str() + ":";
    for (std::size_t k = 0; k < kids.size(); ++k) s += (k ? "," : "") + kids[k];
    text[i] = s + ")";
    if (i == node) break;
  }
  (void)space;
  return {std::move(text[node])};
}

CanonicalCode canonical_code(const Space& space) { return canonical_code(space, build_nerve(space), 0); }

Analysis::Analysis(Space space) : space_(std::move(space)), nerve_(build_nerve(space_)) {
  codes_ = ultra::node_codes(nerve_, table_);
  const std::size_t n = space_.size();

  pointed_.resize(n);
  for (PointIndex p = 0; p < n; ++p) {
    const auto chain = nerve_.chain(p);
    auto& out = pointed_[p];
    out.reserve(chain.size());
    out.push_back(table_.intern_pointed(Rational(0), -1, {}));
    for (std::size_t i = 1; i < chain.size(); ++i) {
      const auto& node = nerve_.node(chain[i]);
      std::vector<int> others;
      for (std::size_t c : node.children)
        if (c != chain[i - 1]) others.push_back(codes_[c]);
      std::sort(others.begin(), others.end());
      out.push_back(table_.intern_pointed(node.diameter, out.back(), others));
    }
  }

  std::map<std::vector<Level>, int> seen;
  spectrum_ids_.resize(n);
  for (PointIndex p = 0; p < n; ++p) {
    std::vector<Level> spec;
    for (std::size_t id : nerve_.chain(p)) spec.push_back(nerve_.node(id).level);
    spectrum_ids_[p] = seen.try_emplace(std::move(spec), static_cast<int>(seen.size())).first->second;
  }
}

void match_subtrees(const NerveTree& a, const std::vector<int>& codes_a, std::size_t u, const NerveTree& b,
                    const std::vector<int>& codes_b, std::size_t v, Bijection& out) {
  if (codes_a[u] != codes_b[v]) throw std::logic_error("match_subtrees: codes differ");
  const auto& nu = a.node(u);
  const auto& nv = b.node(v);
  if (nu.is_leaf()) {
    out[nu.least()] = nv.least();
    return;
  }
  std::vector<char> used(nv.children.size(), 0);
  for (std::size_t c : nu.children) {
    std::size_t k = 0;
    while (k < nv.children.size() && (used[k] || codes_b[nv.children[k]] != codes_a[c])) ++k;
    if (k == nv.children.size()) throw std::logic_error("match_subtrees: child multisets differ");
    used[k] = 1;
    match_subtrees(a, codes_a, c, b, codes_b, nv.children[k], out);
  }
}

}  // namespace ultra
