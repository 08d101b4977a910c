#pragma once

#include <cstddef>
#include <random>

#include "circuitsplit/network.hpp"

namespace circuitsplit {

struct RandomNetworkOptions {
  int min_n = 2;
  int max_n = 6;
  std::size_t max_edges = 10;
  bool cactus = false;    // identify labels along a random noncrossing partition
  bool allow_loops = false;
};

// Random network with a disk embedding, grown by face-preserving moves:
// chords inside a face, pendant interior vertices, edge subdivisions.
// Conductances are small positive rationals.
CircularNetwork random_planar_network(std::mt19937_64& rng, const RandomNetworkOptions& options = {});

}  // namespace circuitsplit
