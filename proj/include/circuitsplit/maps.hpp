#pragma once

#include <cstddef>
#include <vector>

#include "circuitsplit/error.hpp"
#include "circuitsplit/ext_rational.hpp"
#include "circuitsplit/matrix.hpp"
#include "circuitsplit/network.hpp"
#include "circuitsplit/partition.hpp"
#include "circuitsplit/split_system.hpp"

namespace circuitsplit {

// Spanning forest in which every tree holds at least one boundary vertex.
struct Grove {
  std::vector<std::size_t> edges;  // edge indices, increasing
  std::size_t tree_count = 0;
  SetPartition label_partition;    // labels grouped by tree, canonical order
  ExtRat weight;                   // product of conductances
};

// All k-groves of the network, by exhaustive search over edge subsets.
// Subsets are visited in lexicographic order of edge indices.
std::vector<Grove> enumerate_groves(const CircularNetwork& net, std::size_t k, const Limits& limits = {});

// Graphical map: Kron edge {i, j}, i < j, becomes the split {i+1..j} with
// weight M_ij. Infinite entries (shared cactus vertices) cut the label
// circle into the parts of the output partition.
CompactifiedSplitSystem xi(const CircularNetwork& net);
CompactifiedSplitSystem xi(const ExtMatrix& response);

// Cographical map: Kron edge {i, j}, i < j, becomes the split {i..j-1}.
CompactifiedSplitSystem xi_prime(const CircularNetwork& net);
CompactifiedSplitSystem xi_prime(const ExtMatrix& response);

// Induced split system from 2-groves, one part per connected component.
// Requires a circular planar network; a 2-grove whose label bipartition is
// not circular raises DomainError.
CompactifiedSplitSystem sigma(const CircularNetwork& net, const Limits& limits = {});

// Kalmanson map: blockwise split decomposition of the resistance matrix in
// clockwise order. Blocks are the classes of labels at finite resistance.
CompactifiedSplitSystem rho(const CircularNetwork& net);
CompactifiedSplitSystem rho(const ExtMatrix& resistance);

}  // namespace circuitsplit
