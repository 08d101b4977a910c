#pragma once

#include <cstddef>
#include <vector>

#include "circuitsplit/network.hpp"

namespace circuitsplit::detail {

// Combinatorial map of a network plus its boundary circle. The circle is
// modelled as n arcs, arc l running clockwise from label l to label l+1, so
// the region outside the disk becomes an ordinary face.
//
// Dart numbering: 2e and 2e+1 are the two directions of network edge e
// (u->v and v->u); arc l contributes darts arc_forward(l) (leaving label l)
// and arc_forward(l)+1 (leaving label l+1).
struct DartMap {
  std::size_t edge_count = 0;
  int n = 0;
  std::vector<std::size_t> origin;
  std::vector<std::size_t> next_cw;
  std::vector<std::size_t> prev_cw;

  std::size_t size() const { return origin.size(); }
  static std::size_t reverse(std::size_t d) { return d ^ 1U; }
  bool is_arc(std::size_t d) const { return d >= 2 * edge_count; }
  std::size_t edge_of(std::size_t d) const { return d / 2; }
  std::size_t arc_forward(int label) const { return 2 * edge_count + 2 * static_cast<std::size_t>(label - 1); }
  // Label l such that d belongs to arc l.
  int arc_label(std::size_t d) const { return static_cast<int>((d - 2 * edge_count) / 2) + 1; }
  bool is_arc_forward(std::size_t d) const { return is_arc(d) && (d % 2 == 0); }

  // Face walk: arrive along d, continue with the next dart clockwise.
  // Bounded faces are traversed counterclockwise (face on the left).
  std::size_t face_next(std::size_t d) const { return next_cw[reverse(d)]; }
};

// Throws DomainError if the network has no rotation system.
DartMap build_dart_map(const CircularNetwork& net);

struct FaceSet {
  std::vector<std::vector<std::size_t>> faces;  // dart cycles
  std::vector<std::size_t> face_of;             // dart -> face index
  std::size_t outer = 0;                        // face holding the forward arcs
};

FaceSet trace_faces(const DartMap& darts);

}  // namespace circuitsplit::detail
