// Acceptance run: one PASS/FAIL line per criterion, with wall time against
// its limit. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "circuitsplit/duality.hpp"
#include "circuitsplit/electrical.hpp"
#include "circuitsplit/embedding.hpp"
#include "circuitsplit/enumeration.hpp"
#include "circuitsplit/kalmanson.hpp"
#include "circuitsplit/maps.hpp"
#include "circuitsplit/plabic.hpp"
#include "circuitsplit/random_network.hpp"
#include "generators.hpp"
#include "support.hpp"

using namespace circuitsplit;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

int failures = 0;

void criterion(int id, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= limit_s) o.require(false, "over time limit");
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << " (" << std::fixed << std::setprecision(3) << secs
            << " s / " << limit_s << " s)";
  if (!o.note.empty()) std::cout << ": " << o.note;
  std::cout << std::endl;
}

std::vector<CircularNetwork> corpus(bool cactus, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RandomNetworkOptions opt;
  opt.max_n = 6;
  opt.max_edges = 10;
  opt.cactus = cactus;
  std::vector<CircularNetwork> nets;
  for (int i = 0; i < count; ++i) nets.push_back(random_planar_network(rng, opt));
  return nets;
}

std::vector<BigInt> big(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<BigInt> tail(const CountSeries& s) { return {s.terms.begin() + 1, s.terms.end()}; }

}  // namespace

int main() {
  const auto planar = corpus(false, 120, 1);
  const auto cacti = corpus(true, 40, 2);

  criterion(1, 1.0, [](Outcome& o) {
    const auto w = resistance_matrix(testsupport::load_matrix("nonplanar_M.json"));
    o.require(w == testsupport::load_matrix("nonplanar_W.json"), "W differs from the golden matrix");
    o.require(w.at(2, 3) == ExtRat(109, 48), "W_34 != 109/48");
  });

  criterion(2, 1.0, [](Outcome& o) {
    o.require(resistance_matrix(testsupport::load_matrix("cactus_M.json")) == testsupport::load_matrix("cactus_W.json"),
              "W(N) differs");
    o.require(resistance_matrix(testsupport::load_matrix("cactus_dual_M.json")) ==
                  testsupport::load_matrix("cactus_dual_W.json"),
              "W(N*) differs");
  });

  criterion(3, 1.0, [](Outcome& o) {
    const auto m = testsupport::load_matrix("fig1_dual_M.json");
    const auto read_off = xi_prime(m);
    o.require(read_off.parts().size() == 1, "xi' is not a single part");
    const auto& part = read_off.parts().front();
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = i + 1; j < 8; ++j) nonzero += m.at(i, j) != ExtRat(0);
    }
    o.require(part.splits().size() == nonzero, "not every nonzero entry gives a split");
    bool s2345 = false, s1 = false;
    for (const auto& sp : part.splits()) {
      if (sp.side == std::vector<int>{2, 3, 4, 5}) s2345 = sp.weight == ExtRat(15, 28);
      if (sp.side == std::vector<int>{2, 3, 4, 5, 6, 7, 8}) s1 = sp.weight == ExtRat(11, 28);
    }
    o.require(s2345 && s1, "expected split weights missing");
    const auto w = metric_of_splits(read_off);
    o.require(is_kalmanson(w, clockwise_order(8)).kalmanson, "W(N) not Kalmanson");
    o.require(rho(w) == read_off, "rho(W) != xi'(M(N*))");
    o.require(is_kalmanson(resistance_matrix(m), clockwise_order(8)).kalmanson, "W(N*) not Kalmanson");
  });

  criterion(4, 120.0, [&](Outcome& o) {
    for (const auto& net : planar) {
      o.require(sigma(net) == rho(net), "sigma != rho on " + serialize_network(net));
    }
  });

  criterion(5, 120.0, [&](Outcome& o) {
    std::vector<CircularNetwork> all = planar;
    all.insert(all.end(), cacti.begin(), cacti.end());
    for (const auto& net : all) {
      const auto dual = planar_dual(net);
      o.require(xi(net) == rho(dual), "xi != rho of dual on " + serialize_network(net));
      o.require(xi_prime(dual) == rho(net), "xi' of dual != rho on " + serialize_network(net));
      o.require(response_matrix(planar_dual(dual)) == response_matrix(relabel_rotate(net, 1)),
                "double dual differs on " + serialize_network(net));
    }
  });

  criterion(6, 30.0, [](Outcome& o) {
    o.require(tail(count_series("omega", 5)) == big({1, 2, 8, 52, 464}), "omega");
    o.require(tail(count_series("omegaBar", 5)) == big({1, 3, 15, 105, 945}), "omegaBar");
    const auto psi = count_series("psi", 5);
    o.require(tail(psi) == big({1, 2, 8, 64, 1024}), "psi");
    const auto psi_bar = count_series("psiBar", 5);
    o.require(tail(psi_bar) == big({1, 3, 15, 117, 1565}), "psiBar (Lagrange)");
    for (int k = 1; k <= 5; ++k) {
      o.require(composition_count(psi, k) == psi_bar.terms[static_cast<std::size_t>(k)], "psiBar (composition)");
    }
    o.require(tail(count_series("xiImage", 5)) == big({1, 2, 8, 49, 373}), "xiImage");
    o.require(tail(count_series("faithfulBar", 5)) == big({1, 3, 15, 102, 839}), "faithfulBar");
  });

  criterion(7, 30.0, [](Outcome& o) {
    o.require(enumerate_cells("psiBar", 4).f_vector == big({14, 28, 29, 24, 15, 6, 1}), "psiBar_4");
    o.require(enumerate_cells("faithfulBar", 4).f_vector == big({14, 28, 28, 20, 9, 2, 1}), "faithfulBar_4");
    o.require(enumerate_cells("psi", 4).f_vector == big({1, 6, 15, 20, 15, 6, 1}), "psi_4");
    o.note = "Omega_4 f-vector out of scope";
  });

  criterion(8, 60.0, [](Outcome& o) {
    std::mt19937_64 rng(8);
    for (int round = 0; round < 1000; ++round) {
      const int n = 2 + static_cast<int>(rng() % 7);
      const auto sys = testsupport::random_split_system(rng, testsupport::random_order(rng, n));
      const auto w = metric_of_splits(sys);
      const auto back = split_decomposition(w, sys.order());
      o.require(back == sys, "decomposition lost a split");
      o.require(metric_of_splits(back) == w, "metric differs after round trip");
    }
  });

  criterion(9, 10.0, [&](Outcome& o) {
    for (const auto& net : planar) {
      o.require(planarity_obstruction(response_matrix(net)).verdict == Obstruction::NoObstruction,
                "obstruction on planar " + serialize_network(net));
    }
    for (const char* name : {"obstruction_crossing.json", "obstruction_crossing5.json"}) {
      o.require(planarity_obstruction(testsupport::load_matrix(name)).verdict == Obstruction::Obstructed,
                std::string("no obstruction on ") + name);
    }
  });

  return failures == 0 ? 0 : 1;
}
