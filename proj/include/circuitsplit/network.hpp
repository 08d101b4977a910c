#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "circuitsplit/ext_rational.hpp"
#include "json.hpp"

namespace circuitsplit {

struct BoundaryVertex {
  std::string id;
  std::vector<int> labels;  // sorted; more than one label marks a cactus vertex

  friend bool operator==(const BoundaryVertex&, const BoundaryVertex&) = default;
};

struct Edge {
  std::size_t u = 0;  // vertex indices: boundary vertices first, then interior
  std::size_t v = 0;
  ExtRat conductance;

  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Clockwise rotation system. rotation[v] holds one sector per outer gap of v:
// a boundary vertex carrying labels l_1 < ... < l_k has k sectors, sector s
// listing the edge indices met clockwise after the gap of l_s (and before the
// gap of l_{s+1}). An interior vertex has a single sector with its cyclic
// order. A loop appears twice at its vertex.
using Sector = std::vector<std::size_t>;
using Rotation = std::vector<std::vector<Sector>>;

// Weighted graph in a disk with labeled terminals on the boundary circle.
// Immutable; the constructor enforces every structural invariant except the
// topological ones, which validate_embedding() checks.
class CircularNetwork {
 public:
  CircularNetwork(int n, std::vector<BoundaryVertex> boundary, std::vector<std::string> interior,
                  std::vector<Edge> edges, std::optional<Rotation> rotation = std::nullopt);

  int n() const { return n_; }
  const std::vector<BoundaryVertex>& boundary() const { return boundary_; }
  const std::vector<std::string>& interior() const { return interior_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::optional<Rotation>& rotation() const { return rotation_; }

  std::size_t vertex_count() const { return boundary_.size() + interior_.size(); }
  bool is_boundary(std::size_t v) const { return v < boundary_.size(); }
  const std::string& vertex_id(std::size_t v) const;
  // Labels on v; empty for interior vertices.
  const std::vector<int>& labels_of(std::size_t v) const;
  // Boundary vertex index carrying `label` (1-based label).
  std::size_t vertex_of_label(int label) const { return label_vertex_[label - 1]; }
  // True when every boundary vertex carries a single label.
  bool is_plain() const { return boundary_.size() == static_cast<std::size_t>(n_); }

  CircularNetwork without_rotation() const;

  friend bool operator==(const CircularNetwork& a, const CircularNetwork& b);

 private:
  int n_;
  std::vector<BoundaryVertex> boundary_;
  std::vector<std::string> interior_;
  std::vector<Edge> edges_;
  std::optional<Rotation> rotation_;
  std::vector<std::size_t> label_vertex_;
};

CircularNetwork network_from_json(const nlohmann::json& j);
nlohmann::json network_to_json(const CircularNetwork& net);
CircularNetwork parse_network(const std::string& text);
std::string serialize_network(const CircularNetwork& net);

// Connected components of the underlying graph; each component is a sorted
// list of vertex indices, components ordered by smallest vertex.
std::vector<std::vector<std::size_t>> connected_components(const CircularNetwork& net);

}  // namespace circuitsplit
