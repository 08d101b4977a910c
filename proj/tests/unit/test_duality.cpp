#include "circuitsplit/duality.hpp"
#include "circuitsplit/electrical.hpp"
#include "circuitsplit/embedding.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace circuitsplit;

namespace {

std::vector<BoundaryVertex> plain_boundary(int n) {
  std::vector<BoundaryVertex> b;
  for (int i = 1; i <= n; ++i) b.push_back({std::to_string(i), {i}});
  return b;
}

CircularNetwork single_edge(const ExtRat& c) {
  return CircularNetwork(2, plain_boundary(2), {}, {{0, 1, c}}, Rotation{{{0}}, {{0}}});
}

}  // namespace

TEST_CASE("dual of small networks") {
  const auto d = planar_dual(single_edge(ExtRat(3)));
  REQUIRE(d.edges().size() == 1);
  CHECK(d.edges()[0].conductance == ExtRat(1, 3));
  CHECK(d.interior().empty());
  CHECK(validate_embedding(d).valid);

  // Series pair between 1 and 2 dualizes to a parallel pair.
  const CircularNetwork ser(2, plain_boundary(2), {"v"}, {{0, 2, ExtRat(2)}, {2, 1, ExtRat(5)}},
                            Rotation{{{0}}, {{1}}, {{0, 1}}});
  REQUIRE(validate_embedding(ser).valid);
  const auto par = planar_dual(ser);
  CHECK(validate_embedding(par).valid);
  CHECK(par.interior().empty());
  CHECK(response_matrix(par).label(1, 2) == ExtRat(1, 2) + ExtRat(1, 5));
}

TEST_CASE("dual of the cactus example reproduces the printed matrices") {
  const auto net = testsupport::load_network("cactus_network.json");
  const auto dual = planar_dual(net);
  CHECK(validate_embedding(dual).valid);
  CHECK(dual.edges().size() == net.edges().size());
  CHECK(response_matrix(dual) == testsupport::load_matrix("cactus_dual_M.json"));
  CHECK(resistance_matrix(dual) == testsupport::load_matrix("cactus_dual_W.json"));
  // Bulbs of the cactus become components of the dual (plus the empty bulb).
  CHECK(connected_components(dual).size() == 3);

  const auto twice = planar_dual(dual);
  CHECK(validate_embedding(twice).valid);
  CHECK(equivalent(twice, relabel_rotate(net, 1)));
}

TEST_CASE("strand matchings") {
  const CircularNetwork empty(2, plain_boundary(2), {}, {}, Rotation{{{}}, {{}}});
  const auto e = medial_strands(empty);
  CHECK(e.matching == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
  CHECK(e.crossing_count == 0);

  const auto s = medial_strands(single_edge(ExtRat(1)));
  CHECK(s.matching == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
  CHECK(s.crossing_count == 1);
  CHECK(s.closed_strands == 0);

  const auto cactus = medial_strands(testsupport::load_network("cactus_network.json"));
  CHECK(cactus.matching.size() == 6);
  std::vector<int> seen(13, 0);
  for (auto [a, b] : cactus.matching) {
    ++seen[a];
    ++seen[b];
  }
  for (int i = 1; i <= 12; ++i) CHECK(seen[i] == 1);
  std::size_t passages = 0;
  for (const auto& st : cactus.strands) passages += st.edges.size();
  CHECK(passages == 2 * cactus.crossing_count);
}
