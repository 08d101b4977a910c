#include "circuitsplit/duality.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "circuitsplit/detail/darts.hpp"
#include "circuitsplit/error.hpp"

namespace circuitsplit {

namespace {

using detail::DartMap;

int cyclic(int label, int n) { return ((label - 1) % n + n) % n + 1; }

// Stub reached when a strand leaves through the corner just after the
// forward arc of `label`.
int stub_after(int label) { return 2 * label; }
int stub_before(int label) { return 2 * label - 1; }

}  // namespace

StrandDiagram medial_strands(const CircularNetwork& net) {
  const DartMap m = detail::build_dart_map(net);
  const int n = net.n();
  const std::size_t e_count = m.edge_count;
  // visited[d][side]: passage entering edge of d from origin(d) on that side.
  std::vector<std::array<bool, 2>> visited(2 * e_count, {false, false});
  enum Side { L = 0, R = 1 };

  StrandDiagram out;
  out.crossing_count = e_count;

  auto mark = [&](std::size_t d, int side) {
    visited[d][side] = true;
    visited[d ^ 1U][side] = true;  // same segment walked backwards
  };

  // Follows a strand from state (d, side) until it reaches a stub.
  auto follow = [&](std::size_t d, int side, Strand& s) {
    while (true) {
      mark(d, side);
      s.edges.push_back(m.edge_of(d));
      const std::size_t back = d ^ 1U;
      if (side == L) {
        std::size_t nd = m.prev_cw[back];
        if (m.is_arc(nd)) return stub_after(m.arc_label(nd));
        d = nd;
        side = R;
      } else {
        std::size_t nd = m.next_cw[back];
        if (m.is_arc(nd)) return stub_before(cyclic(m.arc_label(nd) + 1, n));
        d = nd;
        side = L;
      }
    }
  };

  std::vector<bool> stub_used(2 * n + 1, false);
  for (int stub = 1; stub <= 2 * n; ++stub) {
    if (stub_used[stub]) continue;
    const int label = (stub + 1) / 2;
    Strand s;
    s.from = stub;
    if (stub % 2 == 0) {
      const std::size_t d = m.next_cw[m.arc_forward(label)];
      s.to = m.is_arc(d) ? stub_before(cyclic(m.arc_label(d) + 1, n)) : follow(d, L, s);
    } else {
      const std::size_t arc_prev = m.arc_forward(cyclic(label - 1, n)) + 1;
      const std::size_t d = m.prev_cw[arc_prev];
      s.to = m.is_arc(d) ? stub_after(m.arc_label(d)) : follow(d, R, s);
    }
    stub_used[s.from] = stub_used[s.to] = true;
    out.matching.emplace_back(std::min(s.from, s.to), std::max(s.from, s.to));
    out.strands.push_back(std::move(s));
  }
  for (std::size_t d = 0; d < 2 * e_count; ++d) {
    for (int side : {L, R}) {
      if (visited[d][side]) continue;
      Strand s;
      std::size_t cur = d;
      int cs = side;
      while (!visited[cur][cs]) {
        mark(cur, cs);
        s.edges.push_back(m.edge_of(cur));
        const std::size_t back = cur ^ 1U;
        cur = cs == L ? m.prev_cw[back] : m.next_cw[back];
        cs = 1 - cs;
      }
      out.strands.push_back(std::move(s));
      ++out.closed_strands;
    }
  }
  std::sort(out.matching.begin(), out.matching.end());
  return out;
}

CircularNetwork planar_dual(const CircularNetwork& net) {
  const DartMap m = detail::build_dart_map(net);
  const auto fs = detail::trace_faces(m);
  const int n = net.n();

  // Dual label of each inner face from the reversed arcs it contains.
  std::vector<std::vector<int>> face_labels(fs.faces.size());
  for (int l = 1; l <= n; ++l) {
    const std::size_t f = fs.face_of[m.arc_forward(l) + 1];
    if (f == fs.outer) throw DomainError("rotation system is not a disk embedding");
    face_labels[f].push_back(cyclic(l + 1, n));
  }
  for (auto& ls : face_labels) std::sort(ls.begin(), ls.end());

  // Boundary faces ordered by smallest label, then the interior faces.
  std::vector<std::size_t> boundary_faces, interior_faces;
  for (std::size_t f = 0; f < fs.faces.size(); ++f) {
    if (f == fs.outer) continue;
    (face_labels[f].empty() ? interior_faces : boundary_faces).push_back(f);
  }
  std::sort(boundary_faces.begin(), boundary_faces.end(),
            [&](std::size_t a, std::size_t b) { return face_labels[a].front() < face_labels[b].front(); });

  std::vector<std::size_t> vertex_of_face(fs.faces.size(), 0);
  std::vector<BoundaryVertex> boundary;
  std::vector<std::string> interior;
  for (std::size_t f : boundary_faces) {
    vertex_of_face[f] = boundary.size();
    std::string id = "f";
    for (std::size_t i = 0; i < face_labels[f].size(); ++i) id += (i ? "_" : "") + std::to_string(face_labels[f][i]);
    boundary.push_back({id, face_labels[f]});
  }
  for (std::size_t k = 0; k < interior_faces.size(); ++k) {
    vertex_of_face[interior_faces[k]] = boundary.size() + k;
    interior.push_back("g" + std::to_string(k + 1));
  }

  std::vector<Edge> edges;
  for (std::size_t e = 0; e < m.edge_count; ++e) {
    edges.push_back({vertex_of_face[fs.face_of[2 * e]], vertex_of_face[fs.face_of[2 * e + 1]],
                     net.edges()[e].conductance.reciprocal()});
  }

  // The dual dart of primal dart d leaves the face on the left of d, so the
  // clockwise order around a dual vertex is its face cycle reversed.
  Rotation rot(boundary.size() + interior.size());
  for (std::size_t f = 0; f < fs.faces.size(); ++f) {
    if (f == fs.outer) continue;
    std::vector<std::size_t> cw(fs.faces[f].rbegin(), fs.faces[f].rend());
    auto& sectors = rot[vertex_of_face[f]];
    if (face_labels[f].empty()) {
      sectors.push_back({});
      for (std::size_t d : cw) sectors.back().push_back(m.edge_of(d));
      continue;
    }
    // Cut the cycle at the reversed arcs; each arc is the gap of one label.
    std::map<int, Sector> by_label;
    const std::size_t len = cw.size();
    for (std::size_t i = 0; i < len; ++i) {
      if (!m.is_arc(cw[i])) continue;
      const int label = cyclic(m.arc_label(cw[i]) + 1, n);
      Sector s;
      for (std::size_t k = 1; k < len && !m.is_arc(cw[(i + k) % len]); ++k) s.push_back(m.edge_of(cw[(i + k) % len]));
      by_label[label] = std::move(s);
    }
    for (auto& [label, s] : by_label) sectors.push_back(std::move(s));
  }
  return CircularNetwork(n, std::move(boundary), std::move(interior), std::move(edges), std::move(rot));
}

CircularNetwork relabel_rotate(const CircularNetwork& net, int shift) {
  const int n = net.n();
  const std::size_t b = net.boundary().size();
  struct Item {
    BoundaryVertex vertex;
    std::vector<Sector> sectors;
    std::size_t old_index;
  };
  std::vector<Item> items;
  for (std::size_t v = 0; v < b; ++v) {
    const auto& bv = net.boundary()[v];
    std::vector<std::pair<int, Sector>> paired;
    for (std::size_t s = 0; s < bv.labels.size(); ++s) {
      Sector sec = net.rotation() ? (*net.rotation())[v][s] : Sector{};
      paired.emplace_back(cyclic(bv.labels[s] + shift, n), std::move(sec));
    }
    std::sort(paired.begin(), paired.end());
    Item it{{bv.id, {}}, {}, v};
    for (auto& [l, sec] : paired) {
      it.vertex.labels.push_back(l);
      it.sectors.push_back(std::move(sec));
    }
    items.push_back(std::move(it));
  }
  std::sort(items.begin(), items.end(),
            [](const Item& x, const Item& y) { return x.vertex.labels.front() < y.vertex.labels.front(); });

  std::vector<std::size_t> new_index(net.vertex_count());
  for (std::size_t v = b; v < net.vertex_count(); ++v) new_index[v] = v;
  std::vector<BoundaryVertex> boundary;
  std::optional<Rotation> rot;
  if (net.rotation()) rot = Rotation(net.vertex_count());
  for (std::size_t k = 0; k < items.size(); ++k) {
    new_index[items[k].old_index] = k;
    boundary.push_back(items[k].vertex);
    if (rot) (*rot)[k] = items[k].sectors;
  }
  if (rot) {
    for (std::size_t v = b; v < net.vertex_count(); ++v) (*rot)[v] = (*net.rotation())[v];
  }
  std::vector<Edge> edges;
  for (const auto& e : net.edges()) edges.push_back({new_index[e.u], new_index[e.v], e.conductance});
  return CircularNetwork(n, std::move(boundary), net.interior(), std::move(edges), std::move(rot));
}

nlohmann::json strand_diagram_to_json(const StrandDiagram& d) {
  nlohmann::json j;
  auto matching = nlohmann::json::array();
  for (auto [a, b] : d.matching) matching.push_back({a, b});
  j["matching"] = std::move(matching);
  auto strands = nlohmann::json::array();
  for (const auto& s : d.strands) {
    nlohmann::json js{{"edges", s.edges}};
    if (s.from != 0) {
      js["from"] = s.from;
      js["to"] = s.to;
    }
    strands.push_back(std::move(js));
  }
  j["strands"] = std::move(strands);
  j["crossingCount"] = d.crossing_count;
  j["closedStrands"] = d.closed_strands;
  return j;
}

}  // namespace circuitsplit
