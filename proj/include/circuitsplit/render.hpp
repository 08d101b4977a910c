#pragma once

#include <string>

#include "circuitsplit/duality.hpp"
#include "circuitsplit/network.hpp"
#include "circuitsplit/plabic.hpp"
#include "circuitsplit/split_system.hpp"

namespace circuitsplit {

// Static drawings. Boundary vertices sit on the unit circle at their label
// angles, interior vertices at the barycenter of their neighbours.
std::string network_to_dot(const CircularNetwork& net);
std::string network_to_svg(const CircularNetwork& net, const StrandDiagram* strands = nullptr);
std::string strands_to_dot(const CircularNetwork& net, const StrandDiagram& strands);

// Polygon diagram of a split system: one polygon per part, one chord per split.
std::string split_system_to_svg(const CompactifiedSplitSystem& sys);
std::string tiling_to_svg(int n, const PlabicTiling& tiling);

}  // namespace circuitsplit
