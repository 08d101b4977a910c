#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "circuitsplit/network.hpp"
#include "json.hpp"

namespace circuitsplit {

// Boundary stubs are numbered 1..2n clockwise; stubs 2i-1 and 2i flank
// label i, 2i-1 on the clockwise-before side.
struct Strand {
  int from = 0;  // stub, 0 for a closed strand
  int to = 0;
  std::vector<std::size_t> edges;  // medial vertices visited, in order
};

struct StrandDiagram {
  std::vector<Strand> strands;                  // stub-to-stub strands, by smaller stub
  std::vector<std::pair<int, int>> matching;    // perfect matching on [2n], pairs (a, b) with a < b
  std::size_t closed_strands = 0;
  std::size_t crossing_count = 0;
};

StrandDiagram medial_strands(const CircularNetwork& net);

// Face-based planar dual with reciprocal conductances. Dual label i sits on
// the boundary arc between labels i-1 and i. Bounded faces become dual
// vertices; a face touching several arcs becomes a cactus vertex.
CircularNetwork planar_dual(const CircularNetwork& net);

// Network with every label l replaced by l + shift (mod n, in 1..n).
CircularNetwork relabel_rotate(const CircularNetwork& net, int shift);

nlohmann::json strand_diagram_to_json(const StrandDiagram& d);

}  // namespace circuitsplit
