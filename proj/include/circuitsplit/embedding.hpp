#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "circuitsplit/network.hpp"
#include "json.hpp"

namespace circuitsplit {

// One step of a face boundary: either a network edge traversed in a given
// direction or a boundary arc (arc l joins label l to label l+1).
struct FaceStep {
  bool arc = false;
  std::size_t index = 0;  // edge index, or arc label
  bool forward = true;    // edge: u->v; arc: clockwise
};

struct EmbeddingReport {
  bool valid = false;
  std::string reason;
  std::vector<std::vector<FaceStep>> faces;
  std::size_t outer_face = 0;
  long vertices = 0;
  long edges = 0;  // network edges plus boundary arcs
};

// Checks that the rotation system describes a disk embedding with the
// labels in clockwise order on the outer face. Never throws for topological
// failures; the reason is recorded in the report.
EmbeddingReport validate_embedding(const CircularNetwork& net);

nlohmann::json embedding_report_to_json(const EmbeddingReport& report);

}  // namespace circuitsplit
