#include "circuitsplit/random_network.hpp"

#include <algorithm>

#include "circuitsplit/partition.hpp"

namespace circuitsplit {

namespace {

constexpr std::size_t kArcBase = std::size_t{1} << 40;

struct Builder {
  int n = 0;
  std::vector<std::vector<int>> labels;          // per vertex, empty for interior
  std::vector<std::vector<std::size_t>> cycles;  // clockwise darts per vertex
  std::vector<Edge> edges;
  std::vector<std::size_t> label_vertex;         // label -> vertex

  static std::size_t arc_forward(int l) { return kArcBase + 2 * static_cast<std::size_t>(l - 1); }
  std::size_t arc_prev(int l) const { return arc_forward(l == 1 ? n : l - 1) + 1; }
  static bool is_arc(std::size_t d) { return d >= kArcBase; }

  std::size_t origin(std::size_t d) const {
    if (!is_arc(d)) return d % 2 == 0 ? edges[d / 2].u : edges[d / 2].v;
    const int l = static_cast<int>((d - kArcBase) / 2) + 1;
    return label_vertex[d % 2 == 0 ? l : l % n + 1];
  }

  std::size_t next_cw(std::size_t d) const {
    const auto& c = cycles[origin(d)];
    const auto it = std::find(c.begin(), c.end(), d);
    return c[(static_cast<std::size_t>(it - c.begin()) + 1) % c.size()];
  }

  void insert_after(std::size_t anchor, std::size_t d) {
    auto& c = cycles[origin(anchor)];
    c.insert(std::find(c.begin(), c.end(), anchor) + 1, d);
  }

  struct Corner {
    std::size_t vertex;
    std::size_t anchor;  // new darts go right after this one
  };

  // Corners of every bounded face, as lists.
  std::vector<std::vector<Corner>> inner_faces() const {
    std::vector<std::size_t> all;
    for (const auto& c : cycles) all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    std::vector<bool> seen(all.size(), false);
    auto index = [&](std::size_t d) { return static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), d) - all.begin()); };
    std::vector<std::vector<Corner>> faces;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (seen[i]) continue;
      std::vector<std::size_t> walk;
      std::size_t d = all[i];
      bool outer = false;
      while (!seen[index(d)]) {
        seen[index(d)] = true;
        walk.push_back(d);
        if (d == arc_forward(1)) outer = true;
        d = next_cw(d ^ 1U);
      }
      if (outer) continue;
      std::vector<Corner> corners;
      for (std::size_t k = 0; k < walk.size(); ++k) {
        const std::size_t prev = walk[(k + walk.size() - 1) % walk.size()];
        corners.push_back({origin(walk[k]), prev ^ 1U});
      }
      faces.push_back(std::move(corners));
    }
    return faces;
  }
};

ExtRat random_conductance(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 6);
  std::uniform_int_distribution<long> den(1, 4);
  return ExtRat(num(rng), den(rng));
}

}  // namespace

CircularNetwork random_planar_network(std::mt19937_64& rng, const RandomNetworkOptions& options) {
  Builder b;
  b.n = std::uniform_int_distribution<int>(options.min_n, options.max_n)(rng);
  const int n = b.n;

  SetPartition blocks;
  if (options.cactus && n >= 2) {
    const auto all = noncrossing_partitions(n);
    std::vector<const SetPartition*> merged;
    for (const auto& p : all) {
      if (p.size() < static_cast<std::size_t>(n)) merged.push_back(&p);
    }
    blocks = *merged[std::uniform_int_distribution<std::size_t>(0, merged.size() - 1)(rng)];
  } else {
    for (int l = 1; l <= n; ++l) blocks.push_back({l});
  }

  b.label_vertex.assign(n + 1, 0);
  for (const auto& block : blocks) {
    const std::size_t v = b.labels.size();
    b.labels.push_back(block);
    for (int l : block) b.label_vertex[l] = v;
  }
  const std::size_t boundary_count = b.labels.size();
  b.cycles.resize(boundary_count);
  for (std::size_t v = 0; v < boundary_count; ++v) {
    const auto& ls = b.labels[v];
    for (std::size_t s = 0; s < ls.size(); ++s) {
      b.cycles[v].push_back(Builder::arc_forward(ls[s]));
      b.cycles[v].push_back(b.arc_prev(ls[(s + 1) % ls.size()]));
    }
  }

  const std::size_t target = std::uniform_int_distribution<std::size_t>(0, options.max_edges)(rng);
  std::uniform_int_distribution<int> move(0, 99);
  std::size_t attempts = 0;
  while (b.edges.size() < target && attempts++ < 50 * (target + 1)) {
    const int roll = move(rng);
    if (roll < 20 && !b.edges.empty()) {
      // Subdivide an edge.
      const std::size_t e = std::uniform_int_distribution<std::size_t>(0, b.edges.size() - 1)(rng);
      const std::size_t w = b.cycles.size();
      const std::size_t e2 = b.edges.size();
      const std::size_t far = b.edges[e].v;
      auto& far_cycle = b.cycles[far];
      // A loop has both darts at the same vertex; the far one is 2e+1.
      *std::find(far_cycle.begin(), far_cycle.end(), 2 * e + 1) = 2 * e2 + 1;
      b.edges[e].v = w;
      b.edges.push_back({w, far, random_conductance(rng)});
      b.labels.emplace_back();
      b.cycles.push_back({2 * e + 1, 2 * e2});
      continue;
    }
    const auto faces = b.inner_faces();
    const auto& face = faces[std::uniform_int_distribution<std::size_t>(0, faces.size() - 1)(rng)];
    std::uniform_int_distribution<std::size_t> pick(0, face.size() - 1);
    const auto a = face[pick(rng)];
    const std::size_t e = b.edges.size();
    if (roll < 45) {
      // Pendant interior vertex.
      const std::size_t w = b.cycles.size();
      b.edges.push_back({a.vertex, w, random_conductance(rng)});
      b.labels.emplace_back();
      b.cycles.push_back({2 * e + 1});
      b.insert_after(a.anchor, 2 * e);
      continue;
    }
    const auto c = face[pick(rng)];
    if (a.vertex == c.vertex && !options.allow_loops) continue;
    b.edges.push_back({a.vertex, c.vertex, random_conductance(rng)});
    if (a.anchor == c.anchor) {
      b.insert_after(a.anchor, 2 * e);
      b.insert_after(2 * e, 2 * e + 1);
    } else {
      b.insert_after(a.anchor, 2 * e);
      b.insert_after(c.anchor, 2 * e + 1);
    }
  }

  std::vector<BoundaryVertex> boundary;
  std::vector<std::string> interior;
  Rotation rot(b.cycles.size());
  for (std::size_t v = 0; v < b.cycles.size(); ++v) {
    const auto& cyc = b.cycles[v];
    if (v < boundary_count) {
      boundary.push_back({"b" + std::to_string(b.labels[v].front()), b.labels[v]});
      for (int l : b.labels[v]) {
        Sector s;
        std::size_t i = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), Builder::arc_forward(l)) - cyc.begin());
        for (i = (i + 1) % cyc.size(); !Builder::is_arc(cyc[i]); i = (i + 1) % cyc.size()) s.push_back(cyc[i] / 2);
        rot[v].push_back(std::move(s));
      }
    } else {
      interior.push_back("v" + std::to_string(v - boundary_count + 1));
      Sector s;
      for (std::size_t d : cyc) s.push_back(d / 2);
      rot[v].push_back(std::move(s));
    }
  }
  return CircularNetwork(n, std::move(boundary), std::move(interior), std::move(b.edges), std::move(rot));
}

}  // namespace circuitsplit
