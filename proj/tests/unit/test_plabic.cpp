#include <random>

#include "circuitsplit/electrical.hpp"
#include "circuitsplit/maps.hpp"
#include "circuitsplit/plabic.hpp"
#include "circuitsplit/random_network.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace circuitsplit;

namespace {

// Oracle: complete every crossing pair until nothing changes; closed iff
// nothing had to be added. Crossing is tested by point positions on a circle.
bool closure_oracle(int n, std::set<Chord> chords) {
  const auto original = chords;
  auto between = [](int a, int b, int x) { return a < x && x < b; };
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Chord> list(chords.begin(), chords.end());
    for (const auto& p : list) {
      for (const auto& q : list) {
        std::set<int> pts{p.first, p.second, q.first, q.second};
        if (pts.size() != 4) continue;
        if (between(p.first, p.second, q.first) == between(p.first, p.second, q.second)) continue;
        std::vector<int> v(pts.begin(), pts.end());
        for (int a = 0; a < 4; ++a) {
          for (int b = a + 1; b < 4; ++b) changed |= chords.insert({v[a], v[b]}).second;
        }
      }
    }
  }
  (void)n;
  return chords == original;
}

}  // namespace

TEST_CASE("Ptolemy condition examples") {
  CHECK(ptolemy_closed(make_chord_set(4, {})).closed);
  const auto x = ptolemy_closed(make_chord_set(4, {{1, 3}, {2, 4}}));
  CHECK_FALSE(x.closed);
  CHECK(x.violation == std::make_pair(Chord{1, 3}, Chord{2, 4}));
  CHECK(ptolemy_closed(make_chord_set(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})).closed);
  CHECK(chords_cross({1, 3}, {2, 4}));
  CHECK_FALSE(chords_cross({1, 3}, {3, 4}));
  CHECK_FALSE(chords_cross({1, 4}, {2, 3}));
  CHECK_THROWS_AS(make_chord_set(3, {{1, 1}}), DomainError);
}

TEST_CASE("Ptolemy check agrees with the closure oracle") {
  std::mt19937_64 rng(21);
  int closed = 0;
  for (int round = 0; round < 2000; ++round) {
    const int n = 4 + static_cast<int>(rng() % 4);
    std::vector<Chord> chords;
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        if (rng() % 3 == 0) chords.emplace_back(a, b);
      }
    }
    const auto cs = make_chord_set(n, chords);
    const bool ours = ptolemy_closed(cs).closed;
    CHECK(ours == closure_oracle(n, cs.chords));
    closed += ours;
  }
  CHECK(closed > 100);
}

TEST_CASE("plabic tilings") {
  // Full system on four labels: one clique.
  std::vector<Split> full;
  for (auto side : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 3}, {3, 4}, {2, 3, 4}}) {
    full.push_back({side, ExtRat(1)});
  }
  const auto k4 = plabic_tiling(CompactifiedSplitSystem(4, {WeightedSplitSystem({1, 2, 3, 4}, full)}));
  REQUIRE(k4.ok);
  REQUIRE(k4.parts[0].regions.size() == 1);
  CHECK_FALSE(k4.parts[0].regions[0].shaded);
  CHECK(k4.parts[0].bridges.empty());

  const auto bad = plabic_tiling(CompactifiedSplitSystem(
      4, {WeightedSplitSystem({1, 2, 3, 4}, {{{3, 4}, ExtRat(1)}, {{2, 3}, ExtRat(1)}})}));
  CHECK_FALSE(bad.ok);
  CHECK(bad.violation == std::make_pair(Chord{1, 3}, Chord{2, 4}));

  const auto fig = plabic_tiling(xi_prime(testsupport::load_matrix("fig1_dual_M.json")));
  REQUIRE(fig.ok);
  // Chords 1-5 and 2-6 cross and complete to the clique on 1, 2, 5, 6.
  std::vector<std::vector<int>> unshaded;
  for (const auto& r : fig.parts[0].regions) {
    if (!r.shaded) unshaded.push_back(r.vertices);
  }
  CHECK(unshaded == std::vector<std::vector<int>>{{1, 2, 5, 6}});
  CHECK(fig.parts[0].chords.size() == 11);

  // Single split on two labels: one bridge.
  const auto two = plabic_tiling(CompactifiedSplitSystem(2, {WeightedSplitSystem({1, 2}, {{{2}, ExtRat(1)}})}));
  REQUIRE(two.ok);
  CHECK(two.parts[0].bridges == std::vector<Chord>{{1, 2}});
}

TEST_CASE("planarity obstruction") {
  const auto crossing = planarity_obstruction(testsupport::load_matrix("obstruction_crossing.json"));
  CHECK(crossing.verdict == Obstruction::Obstructed);
  CHECK(planarity_obstruction(testsupport::load_matrix("obstruction_crossing5.json")).verdict ==
        Obstruction::Obstructed);
  ExtMatrix k4(4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) k4.at(i, j) = i == j ? ExtRat(-3) : ExtRat(1);
  }
  CHECK(planarity_obstruction(k4).verdict == Obstruction::NoObstruction);
  CHECK(planarity_obstruction(testsupport::load_matrix("fig1_dual_M.json")).verdict == Obstruction::NoObstruction);
  CHECK_THROWS_AS(planarity_obstruction(testsupport::load_matrix("cactus_M.json")), DomainError);

  std::mt19937_64 rng(22);
  for (int round = 0; round < 100; ++round) {
    const auto net = random_planar_network(rng);
    CHECK(planarity_obstruction(response_matrix(net)).verdict == Obstruction::NoObstruction);
    CHECK(plabic_tiling(xi(net)).ok);
  }
  RandomNetworkOptions cactus;
  cactus.cactus = true;
  for (int round = 0; round < 50; ++round) CHECK(plabic_tiling(xi(random_planar_network(rng, cactus))).ok);
}
