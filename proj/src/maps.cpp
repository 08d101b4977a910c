#include "circuitsplit/maps.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "circuitsplit/electrical.hpp"
#include "circuitsplit/kalmanson.hpp"

namespace circuitsplit {

namespace {

// --- graphical maps -------------------------------------------------------

enum class Shift { Counterclockwise, Clockwise };

// Arc of [n] assigned to the Kron edge {i, j}, i < j.
std::vector<int> kron_edge_arc(int i, int j, Shift shift) {
  std::vector<int> arc;
  if (shift == Shift::Counterclockwise) {
    for (int x = i + 1; x <= j; ++x) arc.push_back(x);
  } else {
    for (int x = i; x < j; ++x) arc.push_back(x);
  }
  return arc;
}

CompactifiedSplitSystem graphical(const ExtMatrix& m, Shift shift) {
  validate_response_matrix(m);
  const int n = static_cast<int>(m.size());

  std::vector<std::vector<bool>> cuts;  // membership vectors of infinite splits
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (m.label(i, j).kind() != ExtRat::Kind::PosInf) continue;
      std::vector<bool> in(n + 1, false);
      for (int x : kron_edge_arc(i, j, shift)) in[x] = true;
      cuts.push_back(std::move(in));
    }
  }
  // Labels share a part iff no infinite split separates them.
  std::vector<int> part_of(n + 1, -1);
  SetPartition parts;
  for (int a = 1; a <= n; ++a) {
    if (part_of[a] >= 0) continue;
    part_of[a] = static_cast<int>(parts.size());
    parts.push_back({a});
    for (int b = a + 1; b <= n; ++b) {
      if (part_of[b] >= 0) continue;
      bool together = std::all_of(cuts.begin(), cuts.end(), [&](const auto& in) { return in[a] == in[b]; });
      if (together) {
        part_of[b] = part_of[a];
        parts.back().push_back(b);
      }
    }
  }

  // Finite splits restricted to each part; coinciding splits add up.
  std::vector<std::map<std::vector<int>, ExtRat>> accum(parts.size());
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const ExtRat& w = m.label(i, j);
      if (w.is_zero() || w.is_infinite()) continue;
      std::vector<bool> in(n + 1, false);
      for (int x : kron_edge_arc(i, j, shift)) in[x] = true;
      for (std::size_t p = 0; p < parts.size(); ++p) {
        std::vector<int> side;
        for (int x : parts[p]) {
          if (in[x]) side.push_back(x);
        }
        if (side.empty() || side.size() == parts[p].size()) continue;
        auto key = canonical_side(side, parts[p]);
        auto [it, fresh] = accum[p].emplace(key, w);
        if (!fresh) it->second += w;
      }
    }
  }

  std::vector<WeightedSplitSystem> systems;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    std::vector<Split> splits;
    for (auto& [side, w] : accum[p]) splits.push_back({side, w});
    systems.emplace_back(parts[p], std::move(splits));
  }
  return CompactifiedSplitSystem(n, std::move(systems));
}

// --- groves ----------------------------------------------------------------

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// Enumerates k-groves on the subgraph induced by `vertices` using the
// candidate `edges`; calls `visit` for each.
template <typename Visit>
void for_each_grove(const CircularNetwork& net, const std::vector<std::size_t>& vertices,
                    const std::vector<std::size_t>& edges, std::size_t k, const Limits& limits, Visit&& visit) {
  if (edges.size() > limits.max_grove_edges && !limits.unsafe) {
    throw SizeGuardError("grove enumeration limited to " + std::to_string(limits.max_grove_edges) + " edges",
                         {{"edges", edges.size()}});
  }
  if (k == 0 || k > vertices.size()) return;
  const std::size_t pick = vertices.size() - k;
  if (pick > edges.size()) return;

  std::vector<std::size_t> local(net.vertex_count(), 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = i;

  std::vector<std::size_t> idx(pick);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Dsu dsu(vertices.size());
    bool acyclic = true;
    for (std::size_t t : idx) {
      const auto& e = net.edges()[edges[t]];
      if (!dsu.unite(local[e.u], local[e.v])) {
        acyclic = false;
        break;
      }
    }
    if (acyclic) {
      // Exactly k trees now; each must contain a boundary vertex.
      std::map<std::size_t, std::vector<int>> by_root;
      std::vector<bool> has_boundary(vertices.size(), false);
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        std::size_t r = dsu.find(i);
        by_root[r];
        if (net.is_boundary(vertices[i])) {
          has_boundary[r] = true;
          for (int l : net.labels_of(vertices[i])) by_root[r].push_back(l);
        }
      }
      bool ok = std::all_of(by_root.begin(), by_root.end(), [&](const auto& kv) { return has_boundary[kv.first]; });
      if (ok) {
        Grove g;
        g.tree_count = k;
        g.weight = ExtRat(1);
        for (std::size_t t : idx) {
          g.edges.push_back(edges[t]);
          g.weight *= net.edges()[edges[t]].conductance;
        }
        for (auto& [root, labels] : by_root) g.label_partition.push_back(std::move(labels));
        g.label_partition = canonical_partition(std::move(g.label_partition));
        visit(std::move(g));
      }
    }
    // Next combination.
    std::size_t i = pick;
    while (i > 0 && idx[i - 1] == edges.size() - pick + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < pick; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::size_t> non_loop_edges(const CircularNetwork& net) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < net.edges().size(); ++e) {
    if (!net.edges()[e].is_loop()) out.push_back(e);
  }
  return out;
}

}  // namespace

std::vector<Grove> enumerate_groves(const CircularNetwork& net, std::size_t k, const Limits& limits) {
  std::vector<std::size_t> vertices(net.vertex_count());
  std::iota(vertices.begin(), vertices.end(), 0);
  std::vector<Grove> out;
  for_each_grove(net, vertices, non_loop_edges(net), k, limits, [&](Grove g) { out.push_back(std::move(g)); });
  return out;
}

CompactifiedSplitSystem xi(const CircularNetwork& net) { return graphical(response_matrix(net), Shift::Counterclockwise); }
CompactifiedSplitSystem xi(const ExtMatrix& response) { return graphical(response, Shift::Counterclockwise); }
CompactifiedSplitSystem xi_prime(const CircularNetwork& net) { return graphical(response_matrix(net), Shift::Clockwise); }
CompactifiedSplitSystem xi_prime(const ExtMatrix& response) { return graphical(response, Shift::Clockwise); }

CompactifiedSplitSystem sigma(const CircularNetwork& net, const Limits& limits) {
  std::vector<WeightedSplitSystem> parts;
  for (const auto& comp : connected_components(net)) {
    std::vector<int> labels;
    for (std::size_t v : comp) {
      for (int l : net.labels_of(v)) labels.push_back(l);
    }
    if (labels.empty()) continue;  // floating interior piece
    std::sort(labels.begin(), labels.end());

    std::vector<std::size_t> edges;
    for (std::size_t e : non_loop_edges(net)) {
      if (std::binary_search(comp.begin(), comp.end(), net.edges()[e].u)) edges.push_back(e);
    }

    ExtRat tree_total(0);
    for_each_grove(net, comp, edges, 1, limits, [&](const Grove& g) { tree_total += g.weight; });

    std::map<std::vector<int>, ExtRat> by_split;
    for_each_grove(net, comp, edges, 2, limits, [&](const Grove& g) {
      const auto& side = g.label_partition.front();
      if (!is_arc(side, labels)) {
        throw DomainError("2-grove induces a non-circular split; network is not circular planar",
                          {{"sideA", side}, {"edges", g.edges}});
      }
      auto key = canonical_side(side, labels);
      auto [it, fresh] = by_split.emplace(key, g.weight);
      if (!fresh) it->second += g.weight;
    });

    std::vector<Split> splits;
    for (auto& [side, w] : by_split) splits.push_back({side, w / tree_total});
    parts.emplace_back(labels, std::move(splits));
  }
  return CompactifiedSplitSystem(net.n(), std::move(parts));
}

CompactifiedSplitSystem rho(const CircularNetwork& net) { return rho(resistance_matrix(net)); }

CompactifiedSplitSystem rho(const ExtMatrix& w) {
  const int n = static_cast<int>(w.size());
  // Validates symmetry, sign, zero diagonal and block structure.
  (void)is_kalmanson(w, clockwise_order(n));

  SetPartition blocks;
  std::vector<bool> placed(n + 1, false);
  for (int a = 1; a <= n; ++a) {
    if (placed[a]) continue;
    Block b;
    for (int x = a; x <= n; ++x) {
      if (!placed[x] && w.label(a, x).is_finite()) {
        b.push_back(x);
        placed[x] = true;
      }
    }
    blocks.push_back(std::move(b));
  }
  if (!is_noncrossing(blocks)) {
    throw DomainError("finite blocks of the resistance matrix cross in clockwise order", {{"blocks", blocks}});
  }

  std::vector<WeightedSplitSystem> parts;
  for (const auto& block : blocks) {
    const std::size_t k = block.size();
    ExtMatrix sub(k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) sub.at(a, b) = w.label(block[a], block[b]);
    }
    const auto local_order = clockwise_order(static_cast<int>(k));
    const auto report = is_kalmanson(sub, local_order);
    if (!report.kalmanson) {
      std::array<int, 4> witness{};
      for (std::size_t t = 0; t < 4; ++t) witness[t] = block[(*report.witness)[t] - 1];
      throw DomainError("resistance matrix is not Kalmanson in clockwise order", {{"witness", witness}});
    }
    const auto local = split_decomposition(sub, local_order);
    std::vector<Split> splits;
    for (const auto& sp : local.splits()) {
      std::vector<int> side;
      for (int x : sp.side) side.push_back(block[x - 1]);
      splits.push_back({std::move(side), sp.weight});
    }
    parts.emplace_back(block, std::move(splits));
  }
  return CompactifiedSplitSystem(n, std::move(parts));
}

}  // namespace circuitsplit
