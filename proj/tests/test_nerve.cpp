#include "fixtures.hpp"
#include "oracles.hpp"

#include "ultra/nerve.hpp"

#include <doctest.h>

#include <set>

using namespace ultra;

namespace {

std::vector<PointSet> members_of(const std::vector<Ball>& balls) {
  std::vector<PointSet> out;
  for (const auto& b : balls) out.push_back(b.members);
  return out;
}

}  // namespace

TEST_CASE("nerve examples") {
  const Space t3 = fixtures::t3();
  const NerveTree n = build_nerve(t3);
  REQUIRE(n.size() == 5);
  // order: diameter descending, then least member
  CHECK(n.node(0).members == PointSet{0, 1, 2});
  CHECK(n.node(0).diameter == Rational(1));
  CHECK_FALSE(n.node(0).parent.has_value());
  CHECK(n.node(1).members == PointSet{0, 1});
  CHECK(n.node(1).diameter == Rational(1, 2));
  CHECK(n.node(1).parent == std::size_t{0});
  CHECK(n.node(2).members == PointSet{0});
  CHECK(n.node(3).members == PointSet{1});
  CHECK(n.node(4).members == PointSet{2});
  CHECK(n.node(4).parent == std::size_t{0});
  for (std::size_t i = 2; i < 5; ++i) CHECK(n.node(i).diameter == Rational(0));
  CHECK(n.node(0).children == std::vector<std::size_t>{1, 4});

  const NerveTree c = build_nerve(fixtures::c4());
  REQUIRE(c.size() == 7);
  CHECK(c.node(0).diameter == Rational(1));
  CHECK(c.node(1).members == PointSet{0, 1});
  CHECK(c.node(2).members == PointSet{2, 3});
  CHECK(c.node(1).diameter == Rational(1, 2));
  CHECK(c.node(2).diameter == Rational(1, 2));

  const NerveTree one = build_nerve(fixtures::one_point());
  REQUIRE(one.size() == 1);
  CHECK(one.node(0).members == PointSet{0});
  CHECK(one.node(0).diameter == Rational(0));
}

TEST_CASE("nerve matches the closed balls on random spaces") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Space s = fixtures::random_space(seed, 14);
    const NerveTree n = build_nerve(s);
    const auto expected = oracle::nerve_sets(s);
    std::set<PointSet> got;
    for (const auto& node : n.nodes()) got.insert(node.members);
    CHECK(got == expected);
    CHECK(got.size() == n.size());
    CHECK(n.node(0).members.size() == s.size());
    CHECK(n.node(0).diameter == oracle::diameter(s, n.node(0).members));
    for (std::size_t i = 0; i < n.size(); ++i) {
      const auto& node = n.node(i);
      CHECK(node.diameter == oracle::diameter(s, node.members));
      CHECK(node.is_leaf() == (node.diameter == Rational(0)));
      if (node.parent) {
        const auto& p = n.node(*node.parent);
        CHECK(p.diameter > node.diameter);
        CHECK(std::includes(p.members.begin(), p.members.end(), node.members.begin(), node.members.end()));
        // no node strictly between
        for (const auto& other : n.nodes()) {
          if (other.members.size() <= node.members.size() || other.members.size() >= p.members.size()) continue;
          CHECK_FALSE(std::includes(other.members.begin(), other.members.end(), node.members.begin(), node.members.end()));
        }
      }
      if (!node.is_leaf()) {
        // sons partition the node and sit at distance diam(B) from each other
        const auto ss = sons(s, node.as_ball());
        CHECK(ss.size() >= 2);
        std::vector<PointSet> kids;
        for (std::size_t c : node.children) kids.push_back(n.node(c).members);
        CHECK(members_of(ss) == kids);
        PointSet all;
        for (const auto& son : ss) all.insert(all.end(), son.members.begin(), son.members.end());
        std::sort(all.begin(), all.end());
        CHECK(all == node.members);
        for (std::size_t a = 0; a < ss.size(); ++a)
          for (std::size_t b = a + 1; b < ss.size(); ++b)
            for (PointIndex x : ss[a].members)
              for (PointIndex y : ss[b].members) CHECK(s.dist(x, y) == node.diameter);
      }
    }
  }
}

TEST_CASE("sons") {
  const Space t3 = fixtures::t3();
  CHECK(members_of(sons(t3, ball(t3, 0, Rational(1), Openness::Closed))) == std::vector<PointSet>{{0, 1}, {2}});
  CHECK(members_of(sons(t3, ball(t3, 0, Rational(1, 2), Openness::Closed))) == std::vector<PointSet>{{0}, {1}});
  const Space c4 = fixtures::c4();
  CHECK(members_of(sons(c4, ball(c4, 0, Rational(1), Openness::Closed))) == std::vector<PointSet>{{0, 1}, {2, 3}});
  try {
    sons(t3, ball(t3, 0, Rational(0), Openness::Closed));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TrivialBall);
  }
}

TEST_CASE("degree sequence") {
  using M = std::map<Rational, std::size_t>;
  CHECK(degree_sequence(fixtures::t3()).per_radius == M{{Rational(1, 2), 2}, {Rational(1), 2}});
  CHECK(degree_sequence(fixtures::c4()).per_radius == M{{Rational(1, 2), 2}, {Rational(1), 2}});
  CHECK(degree_sequence(fixtures::product("1/2:2,1:3")).per_radius == M{{Rational(1, 2), 2}, {Rational(1), 3}});
  CHECK(degree_sequence(fixtures::one_point()).per_radius.empty());
  // max over balls of one diameter
  const auto seq = degree_sequence(fixtures::pair_and_triple());
  CHECK(seq.per_radius == M{{Rational(1, 2), 3}, {Rational(2), 2}});
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Space s = fixtures::random_space(seed, 12);
    const NerveTree n = build_nerve(s);
    const auto d = degree_sequence(s, n);
    std::map<Rational, std::size_t> expect;
    for (const auto& [node, count] : d.per_ball) {
      CHECK(count >= 2);
      CHECK(count == sons(s, n.node(node).as_ball()).size());
      expect[n.node(node).diameter] = std::max(expect[n.node(node).diameter], count);
    }
    CHECK(expect == d.per_radius);
    const SpectrumSet all = spectrum(s);
    const SpectrumSet positive(all.begin() + 1, all.end());
    SpectrumSet keys;
    for (const auto& kv : d.per_radius) keys.push_back(kv.first);
    CHECK(keys == positive);
  }
}

TEST_CASE("past") {
  const Space t3 = fixtures::t3();
  const NerveTree n = build_nerve(t3);
  CHECK(past(t3, n, {0}) == SpectrumSet{0, Rational(1, 2), 1});
  CHECK(past(t3, n, {2}) == SpectrumSet{0, 1});
  CHECK(past(t3, n, {0, 2}) == SpectrumSet{1});
  CHECK_THROWS_AS(past(t3, n, {}), Error);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Space s = fixtures::random_space(seed, 10);
    const NerveTree nv = build_nerve(s);
    for (const auto& node : nv.nodes()) {
      // brute force: diameters of every node containing the set
      SpectrumSet expect;
      for (const auto& other : nv.nodes())
        if (std::includes(other.members.begin(), other.members.end(), node.members.begin(), node.members.end()))
          expect.push_back(other.diameter);
      std::sort(expect.begin(), expect.end());
      const SpectrumSet p = past(s, nv, node.members);
      CHECK(p == expect);
      // Spec(M, y) = Spec(M|B, y) together with Past(B)
      for (PointIndex y : node.members) {
        std::set<Rational> u(p.begin(), p.end());
        for (const Rational& r : spectrum_within(s, y, node.members)) u.insert(r);
        CHECK(SpectrumSet(u.begin(), u.end()) == spectrum_at(s, y));
      }
    }
  }
}

TEST_CASE("similarity") {
  const Space t3 = fixtures::t3();
  const NerveTree n = build_nerve(t3);
  const Ball a = ball(t3, 0, Rational(0), Openness::Closed);
  const Ball b = ball(t3, 1, Rational(0), Openness::Closed);
  const Ball c = ball(t3, 2, Rational(0), Openness::Closed);
  CHECK(similar(t3, n, a, b));
  CHECK_FALSE(similar(t3, n, a, c));
  CHECK(similar(t3, n, n.node(0).as_ball(), n.node(0).as_ball()));

  // both criteria on every pair of balls of every test space
  std::vector<Space> spaces = fixtures::all();
  for (std::uint64_t seed = 0; seed < 120; ++seed) spaces.push_back(fixtures::random_space(seed, 8));
  for (const Space& s : spaces) {
    if (s.size() > 12) continue;
    const NerveTree nv = build_nerve(s);
    std::vector<Ball> balls;
    for (const auto& m : oracle::all_balls(s)) balls.push_back(Ball{m, diameter(s, m), true, Openness::Closed});
    for (const auto& x : balls)
      for (const auto& y : balls) CHECK_NOTHROW(similar(s, nv, x, y));
  }
}
