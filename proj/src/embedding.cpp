#include "circuitsplit/embedding.hpp"

#include <numeric>

#include "circuitsplit/detail/darts.hpp"
#include "circuitsplit/error.hpp"

namespace circuitsplit {

namespace detail {

DartMap build_dart_map(const CircularNetwork& net) {
  if (!net.rotation()) throw DomainError("network has no rotation system");
  const auto& rot = *net.rotation();
  DartMap m;
  m.edge_count = net.edges().size();
  m.n = net.n();
  const std::size_t total = 2 * m.edge_count + 2 * static_cast<std::size_t>(m.n);
  m.origin.assign(total, 0);
  m.next_cw.assign(total, 0);
  m.prev_cw.assign(total, 0);

  for (std::size_t e = 0; e < m.edge_count; ++e) {
    m.origin[2 * e] = net.edges()[e].u;
    m.origin[2 * e + 1] = net.edges()[e].v;
  }
  for (int l = 1; l <= m.n; ++l) {
    int next = l % m.n + 1;
    m.origin[m.arc_forward(l)] = net.vertex_of_label(l);
    m.origin[m.arc_forward(l) + 1] = net.vertex_of_label(next);
  }
  auto arc_prev = [&](int label) {
    int prev = label == 1 ? m.n : label - 1;
    return m.arc_forward(prev) + 1;
  };

  std::vector<int> loop_seen(m.edge_count, 0);
  for (std::size_t v = 0; v < net.vertex_count(); ++v) {
    std::vector<std::size_t> cycle;
    const auto& labels = net.labels_of(v);
    for (std::size_t s = 0; s < rot[v].size(); ++s) {
      if (net.is_boundary(v)) cycle.push_back(m.arc_forward(labels[s]));
      for (std::size_t e : rot[v][s]) {
        const auto& edge = net.edges()[e];
        if (edge.is_loop()) {
          cycle.push_back(2 * e + static_cast<std::size_t>(loop_seen[e]++));
        } else {
          cycle.push_back(edge.u == v ? 2 * e : 2 * e + 1);
        }
      }
      if (net.is_boundary(v)) cycle.push_back(arc_prev(labels[(s + 1) % labels.size()]));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      std::size_t a = cycle[i];
      std::size_t b = cycle[(i + 1) % cycle.size()];
      m.next_cw[a] = b;
      m.prev_cw[b] = a;
    }
  }
  return m;
}

FaceSet trace_faces(const DartMap& darts) {
  FaceSet fs;
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  fs.face_of.assign(darts.size(), kUnset);
  for (std::size_t start = 0; start < darts.size(); ++start) {
    if (fs.face_of[start] != kUnset) continue;
    std::vector<std::size_t> cycle;
    std::size_t d = start;
    do {
      fs.face_of[d] = fs.faces.size();
      cycle.push_back(d);
      d = darts.face_next(d);
    } while (d != start && fs.face_of[d] == kUnset);
    fs.faces.push_back(std::move(cycle));
  }
  if (darts.n > 0) fs.outer = fs.face_of[darts.arc_forward(1)];
  return fs;
}

}  // namespace detail

EmbeddingReport validate_embedding(const CircularNetwork& net) {
  EmbeddingReport report;
  report.vertices = static_cast<long>(net.vertex_count());
  report.edges = static_cast<long>(net.edges().size()) + net.n();
  if (!net.rotation()) {
    report.reason = "network has no rotation system";
    return report;
  }
  const auto darts = detail::build_dart_map(net);
  const auto fs = detail::trace_faces(darts);

  for (const auto& face : fs.faces) {
    std::vector<FaceStep> steps;
    for (std::size_t d : face) {
      if (darts.is_arc(d)) {
        steps.push_back({true, static_cast<std::size_t>(darts.arc_label(d)), d % 2 == 0});
      } else {
        steps.push_back({false, darts.edge_of(d), d % 2 == 0});
      }
    }
    report.faces.push_back(std::move(steps));
  }
  report.outer_face = fs.outer;

  // Connectivity of network + circle.
  std::vector<std::size_t> parent(net.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t d = 0; d < darts.size(); d += 2) parent[find(darts.origin[d])] = find(darts.origin[d + 1]);
  for (std::size_t v = 1; v < net.vertex_count(); ++v) {
    if (find(v) != find(0)) {
      report.reason = "vertex '" + net.vertex_id(v) + "' is not connected to the boundary";
      return report;
    }
  }

  const long faces = static_cast<long>(fs.faces.size());
  if (report.vertices - report.edges + faces != 2) {
    report.reason = "Euler characteristic V - E + F = " +
                    std::to_string(report.vertices - report.edges + faces) + ", expected 2";
    return report;
  }

  const auto& outer = fs.faces[fs.outer];
  if (outer.size() != static_cast<std::size_t>(net.n())) {
    report.reason = "outer face does not run along the boundary circle";
    return report;
  }
  for (std::size_t i = 0; i < outer.size(); ++i) {
    if (outer[i] != darts.arc_forward(static_cast<int>(i) + 1)) {
      report.reason = "boundary labels are not in clockwise order on the outer face";
      return report;
    }
  }
  report.valid = true;
  return report;
}

nlohmann::json embedding_report_to_json(const EmbeddingReport& report) {
  nlohmann::json j;
  j["verdict"] = report.valid ? "VALID" : "INVALID";
  if (!report.valid) j["reason"] = report.reason;
  j["vertices"] = report.vertices;
  j["edges"] = report.edges;
  j["outerFace"] = report.outer_face;
  auto faces = nlohmann::json::array();
  for (const auto& face : report.faces) {
    auto steps = nlohmann::json::array();
    for (const auto& s : face) {
      steps.push_back({{s.arc ? "arc" : "edge", s.index}, {"forward", s.forward}});
    }
    faces.push_back(std::move(steps));
  }
  j["faces"] = std::move(faces);
  return j;
}

}  // namespace circuitsplit
