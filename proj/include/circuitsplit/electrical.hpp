#pragma once

#include <cstddef>
#include <vector>

#include "circuitsplit/ext_rational.hpp"
#include "circuitsplit/matrix.hpp"
#include "circuitsplit/network.hpp"
#include "json.hpp"

namespace circuitsplit {

// Weighted Laplacian over all vertices of the network (cactus vertices are
// single vertices). Indices follow the network: boundary vertices first.
struct LaplacianView {
  ExtMatrix matrix;
  std::size_t boundary_count = 0;
};

struct ReducedEdge {
  int i = 0;  // labels, i < j
  int j = 0;
  ExtRat weight;  // +inf when i and j share a cactus vertex

  friend bool operator==(const ReducedEdge&, const ReducedEdge&) = default;
};

// Kron reduction: terminals only, one edge per label pair with nonzero
// response entry.
struct ReducedNetwork {
  int n = 0;
  std::vector<ReducedEdge> edges;  // sorted by (i, j)

  friend bool operator==(const ReducedNetwork&, const ReducedNetwork&) = default;
};

LaplacianView laplacian(const CircularNetwork& net);

ReducedNetwork kron_reduce(const CircularNetwork& net);

// M(N): positive off-diagonal conductances, diagonal = -(row sum). Labels on
// a shared cactus vertex get +inf between them and -inf on the diagonal; a
// conductance into a vertex with k labels is divided evenly among them.
ExtMatrix response_matrix(const CircularNetwork& net);

// W(N): effective resistance between labels. 0 for labels sharing a vertex,
// +inf across connected components.
ExtMatrix resistance_matrix(const CircularNetwork& net);
ExtMatrix resistance_matrix(const ExtMatrix& response);

bool equivalent(const CircularNetwork& a, const CircularNetwork& b);

// Throws DomainError when `m` is not a well-formed response matrix.
void validate_response_matrix(const ExtMatrix& m);

// Reads a reduced network (or any response matrix) back as a network whose
// boundary vertices are the classes of labels joined by +inf entries.
CircularNetwork reduced_to_network(const ReducedNetwork& reduced);
ReducedNetwork reduced_from_response(const ExtMatrix& response);

nlohmann::json reduced_to_json(const ReducedNetwork& reduced);

}  // namespace circuitsplit
