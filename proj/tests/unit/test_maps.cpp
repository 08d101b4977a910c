#include <random>

#include "circuitsplit/duality.hpp"
#include "circuitsplit/electrical.hpp"
#include "circuitsplit/embedding.hpp"
#include "circuitsplit/kalmanson.hpp"
#include "circuitsplit/maps.hpp"
#include "circuitsplit/random_network.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace circuitsplit;

namespace {

std::vector<BoundaryVertex> plain_boundary(int n) {
  std::vector<BoundaryVertex> b;
  for (int i = 1; i <= n; ++i) b.push_back({std::to_string(i), {i}});
  return b;
}

CircularNetwork unit_triangle() {
  return CircularNetwork(3, plain_boundary(3), {}, {{0, 1, ExtRat(1)}, {1, 2, ExtRat(1)}, {2, 0, ExtRat(1)}},
                         Rotation{{{0, 2}}, {{1, 0}}, {{2, 1}}});
}

WeightedSplitSystem only_part(const CompactifiedSplitSystem& s) {
  REQUIRE(s.parts().size() == 1);
  return s.parts().front();
}

}  // namespace

TEST_CASE("xi and xi-prime on small inputs") {
  ExtMatrix m(8);
  m.at(2, 7) = m.at(7, 2) = ExtRat(5, 7);
  m.at(2, 2) = m.at(7, 7) = ExtRat(-5, 7);
  const auto s = only_part(xi(m));
  REQUIRE(s.splits().size() == 1);
  CHECK(s.splits()[0].side == std::vector<int>{4, 5, 6, 7, 8});
  CHECK(s.splits()[0].weight == ExtRat(5, 7));

  const CircularNetwork empty(4, plain_boundary(4), {}, {});
  const auto e = xi(empty);
  CHECK(e.split_count() == 0);
  CHECK(e.partition() == SetPartition{{1, 2, 3, 4}});
  CHECK(xi_prime(empty).split_count() == 0);

  const auto dual = xi_prime(testsupport::load_matrix("fig1_dual_M.json"));
  const auto p = only_part(dual);
  CHECK(p.splits().size() == 11);
  bool s2345 = false, s1 = false;
  for (const auto& sp : p.splits()) {
    if (sp.side == std::vector<int>{2, 3, 4, 5}) s2345 = sp.weight == ExtRat(15, 28);
    if (sp.side == std::vector<int>{2, 3, 4, 5, 6, 7, 8}) s1 = sp.weight == ExtRat(11, 28);
  }
  CHECK(s2345);
  CHECK(s1);
}

TEST_CASE("K4 reductions map to the full system") {
  ExtMatrix m(4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = i == j ? ExtRat(-3) : ExtRat(1);
  }
  CHECK(only_part(xi(m)).splits().size() == 6);
}

TEST_CASE("groves") {
  const CircularNetwork edge(2, plain_boundary(2), {}, {{0, 1, ExtRat(3)}});
  const auto trees = enumerate_groves(edge, 1);
  REQUIRE(trees.size() == 1);
  CHECK(trees[0].weight == ExtRat(3));
  const auto two = enumerate_groves(edge, 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].edges.empty());
  CHECK(two[0].weight == ExtRat(1));

  CHECK(enumerate_groves(unit_triangle(), 1).size() == 3);
  CHECK(enumerate_groves(unit_triangle(), 2).size() == 3);

  std::vector<Edge> many;
  for (int i = 0; i < 17; ++i) many.push_back({0, 1, ExtRat(1)});
  const CircularNetwork big(2, plain_boundary(2), {}, many);
  CHECK_THROWS_AS(enumerate_groves(big, 1), SizeGuardError);
  Limits unsafe;
  unsafe.unsafe = true;
  CHECK(enumerate_groves(big, 1, unsafe).size() == 17);
}

TEST_CASE("sigma and rho on small networks") {
  const CircularNetwork edge(2, plain_boundary(2), {}, {{0, 1, ExtRat(4)}}, Rotation{{{0}}, {{0}}});
  const auto s = only_part(sigma(edge));
  REQUIRE(s.splits().size() == 1);
  CHECK(s.splits()[0].weight == ExtRat(1, 4));
  CHECK(rho(edge) == sigma(edge));

  const auto tri = only_part(sigma(unit_triangle()));
  REQUIRE(tri.splits().size() == 3);
  for (const auto& sp : tri.splits()) CHECK(sp.weight == ExtRat(1, 3));
  CHECK(rho(unit_triangle()) == sigma(unit_triangle()));
  CHECK(metric_of_splits(tri).at(0, 1) == ExtRat(2, 3));
}

TEST_CASE("rho on the printed cactus dual resistance") {
  const auto r = rho(testsupport::load_matrix("cactus_dual_W.json"));
  CHECK(r.partition() == SetPartition{{1, 2}, {3, 4, 5}, {6}});
  const auto& middle = r.parts()[1];
  REQUIRE(middle.splits().size() == 3);
  for (const auto& sp : middle.splits()) CHECK(sp.weight == ExtRat(1));
  // The printed cactus and its dual: xi of one is rho of the other.
  const auto net = testsupport::load_network("cactus_network.json");
  CHECK(xi(net) == r);
  CHECK(xi_prime(testsupport::load_matrix("cactus_dual_M.json")) == rho(testsupport::load_matrix("cactus_W.json")));
}

TEST_CASE("rho on the printed dual of the running example") {
  const auto m = testsupport::load_matrix("fig1_dual_M.json");
  // W(N*) of the dual itself is Kalmanson, since N* is planar.
  const auto w_dual = resistance_matrix(m);
  CHECK(is_kalmanson(w_dual, clockwise_order(8)).kalmanson);
  CHECK(rho(w_dual).split_count() == 17);
  // W(N) of the primal: the split metric of xi'(N*).
  const auto w = metric_of_splits(xi_prime(m));
  CHECK(is_kalmanson(w, clockwise_order(8)).kalmanson);
  CHECK(rho(w) == xi_prime(m));
  CHECK_FALSE(rho(w_dual) == xi_prime(m));
}

TEST_CASE("rho rejects non-Kalmanson input with a witness") {
  const auto w = testsupport::load_matrix("nonplanar_W.json");
  try {
    (void)rho(w);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(e.detail().contains("witness"));
  }
}

TEST_CASE("random corpus: embedding, sigma = rho, duality") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 150; ++round) {
    RandomNetworkOptions opt;
    opt.cactus = round % 3 == 2;
    opt.allow_loops = round % 5 == 4;
    const auto net = random_planar_network(rng, opt);
    CAPTURE(serialize_network(net));
    REQUIRE(validate_embedding(net).valid);
    CHECK(parse_network(serialize_network(net)) == net);
    const auto dual = planar_dual(net);
    REQUIRE(validate_embedding(dual).valid);
    CHECK(dual.edges().size() == net.edges().size());
    CHECK(sigma(net) == rho(net));
    CHECK(xi(net) == rho(dual));
    CHECK(xi_prime(dual) == rho(net));
    CHECK(equivalent(planar_dual(dual), relabel_rotate(net, 1)));
    const auto strands = medial_strands(net);
    CHECK(strands.matching.size() == static_cast<std::size_t>(net.n()));
  }
}
