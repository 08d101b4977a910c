#include "circuitsplit/network.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "circuitsplit/error.hpp"
#include "circuitsplit/partition.hpp"

namespace circuitsplit {

namespace {

const std::vector<int> kNoLabels;

void check_rotation(const CircularNetwork& net, const Rotation& rot) {
  if (rot.size() != net.vertex_count()) {
    throw DomainError("rotation must list every vertex");
  }
  std::vector<std::vector<std::size_t>> seen(net.edges().size());
  for (std::size_t v = 0; v < rot.size(); ++v) {
    std::size_t expected = net.is_boundary(v) ? net.labels_of(v).size() : 1;
    if (rot[v].size() != expected) {
      throw DomainError("rotation of vertex '" + net.vertex_id(v) + "' must have " +
                            std::to_string(expected) + " sector(s)",
                        {{"vertex", net.vertex_id(v)}});
    }
    for (const auto& sector : rot[v]) {
      for (std::size_t e : sector) {
        if (e >= net.edges().size()) {
          throw DomainError("rotation references unknown edge " + std::to_string(e),
                            {{"vertex", net.vertex_id(v)}, {"edge", e}});
        }
        seen[e].push_back(v);
      }
    }
  }
  for (std::size_t e = 0; e < net.edges().size(); ++e) {
    std::vector<std::size_t> want = {net.edges()[e].u, net.edges()[e].v};
    std::sort(want.begin(), want.end());
    std::sort(seen[e].begin(), seen[e].end());
    if (seen[e] != want) {
      throw DomainError("rotation must list edge " + std::to_string(e) + " once at each endpoint",
                        {{"edge", e}});
    }
  }
}

std::string id_from_json(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw DomainError("vertex ids must be strings or integers");
}

ExtRat conductance_from_json(const nlohmann::json& j) {
  if (j.is_string()) return ExtRat::parse(j.get<std::string>());
  if (j.is_number_integer()) return ExtRat(j.get<long>());
  throw DomainError("edge conductance 'c' must be a string");
}

template <typename T>
T required(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw DomainError(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

CircularNetwork::CircularNetwork(int n, std::vector<BoundaryVertex> boundary,
                                 std::vector<std::string> interior, std::vector<Edge> edges,
                                 std::optional<Rotation> rotation)
    : n_(n),
      boundary_(std::move(boundary)),
      interior_(std::move(interior)),
      edges_(std::move(edges)),
      rotation_(std::move(rotation)) {
  if (n_ < 1) throw DomainError("network needs at least one boundary label");

  std::set<std::string> ids;
  label_vertex_.assign(n_, static_cast<std::size_t>(-1));
  for (std::size_t v = 0; v < boundary_.size(); ++v) {
    auto& bv = boundary_[v];
    if (bv.id.empty() || !ids.insert(bv.id).second) {
      throw DomainError("duplicate or empty vertex id '" + bv.id + "'", {{"vertex", bv.id}});
    }
    if (bv.labels.empty()) throw DomainError("boundary vertex '" + bv.id + "' has no labels");
    std::sort(bv.labels.begin(), bv.labels.end());
    for (int l : bv.labels) {
      if (l < 1 || l > n_) {
        throw DomainError("label " + std::to_string(l) + " out of range", {{"label", l}});
      }
      if (label_vertex_[l - 1] != static_cast<std::size_t>(-1)) {
        throw DomainError("duplicate label " + std::to_string(l), {{"label", l}});
      }
      label_vertex_[l - 1] = v;
    }
  }
  for (int l = 1; l <= n_; ++l) {
    if (label_vertex_[l - 1] == static_cast<std::size_t>(-1)) {
      throw DomainError("label " + std::to_string(l) + " is not on any boundary vertex", {{"label", l}});
    }
  }

  SetPartition blocks;
  for (const auto& bv : boundary_) blocks.push_back(bv.labels);
  if (!is_noncrossing(blocks)) {
    // Report the first interleaving pair of label sets.
    nlohmann::json witness = nullptr;
    for (std::size_t x = 0; x < blocks.size() && witness.is_null(); ++x) {
      for (std::size_t y = x + 1; y < blocks.size() && witness.is_null(); ++y) {
        if (!is_noncrossing({blocks[x], blocks[y]})) witness = {blocks[x], blocks[y]};
      }
    }
    throw DomainError("crossing label identification", {{"crossing", witness}});
  }
  for (std::size_t v = 1; v < boundary_.size(); ++v) {
    if (boundary_[v - 1].labels.front() > boundary_[v].labels.front()) {
      throw DomainError("boundary vertices must be listed in clockwise label order",
                        {{"vertex", boundary_[v].id}});
    }
  }

  for (const auto& id : interior_) {
    if (id.empty() || !ids.insert(id).second) {
      throw DomainError("duplicate or empty vertex id '" + id + "'", {{"vertex", id}});
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& edge = edges_[e];
    if (edge.u >= vertex_count() || edge.v >= vertex_count()) {
      throw DomainError("edge " + std::to_string(e) + " has an unknown endpoint", {{"edge", e}});
    }
    if (!edge.conductance.is_finite() || edge.conductance.sign() <= 0) {
      throw DomainError("edge " + std::to_string(e) + " must have finite positive conductance",
                        {{"edge", e}, {"c", edge.conductance.to_string()}});
    }
  }
  if (rotation_) check_rotation(*this, *rotation_);
}

const std::string& CircularNetwork::vertex_id(std::size_t v) const {
  return is_boundary(v) ? boundary_[v].id : interior_[v - boundary_.size()];
}

const std::vector<int>& CircularNetwork::labels_of(std::size_t v) const {
  return is_boundary(v) ? boundary_[v].labels : kNoLabels;
}

CircularNetwork CircularNetwork::without_rotation() const {
  return CircularNetwork(n_, boundary_, interior_, edges_, std::nullopt);
}

bool operator==(const CircularNetwork& a, const CircularNetwork& b) {
  return a.n_ == b.n_ && a.boundary_ == b.boundary_ && a.interior_ == b.interior_ &&
         a.edges_ == b.edges_ && a.rotation_ == b.rotation_;
}

CircularNetwork network_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("network must be a JSON object");
  const int n = required<int>(j, "n");

  std::vector<BoundaryVertex> boundary;
  std::map<std::string, std::size_t> index;
  for (const auto& b : required<nlohmann::json>(j, "boundary")) {
    if (!b.contains("id") || !b.contains("labels")) {
      throw DomainError("boundary entries need 'id' and 'labels'");
    }
    BoundaryVertex bv{id_from_json(b.at("id")), {}};
    for (const auto& l : b.at("labels")) {
      if (!l.is_number_integer()) throw DomainError("labels must be integers");
      bv.labels.push_back(l.get<int>());
    }
    index.emplace(bv.id, boundary.size());
    boundary.push_back(std::move(bv));
  }

  std::vector<std::string> interior;
  if (j.contains("interior")) {
    for (const auto& id : j.at("interior")) {
      interior.push_back(id_from_json(id));
      index.emplace(interior.back(), boundary.size() + interior.size() - 1);
    }
  }

  auto lookup = [&](const nlohmann::json& id) {
    auto key = id_from_json(id);
    auto it = index.find(key);
    if (it == index.end()) throw DomainError("unknown vertex id '" + key + "'", {{"vertex", key}});
    return it->second;
  };

  std::vector<Edge> edges;
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      if (!e.contains("u") || !e.contains("v") || !e.contains("c")) {
        throw DomainError("edges need 'u', 'v' and 'c'");
      }
      edges.push_back({lookup(e.at("u")), lookup(e.at("v")), conductance_from_json(e.at("c"))});
    }
  }

  std::optional<Rotation> rotation;
  if (j.contains("rotation") && !j.at("rotation").is_null()) {
    const auto& r = j.at("rotation");
    if (!r.is_object()) throw DomainError("rotation must be an object keyed by vertex id");
    Rotation rot(boundary.size() + interior.size());
    std::vector<bool> given(rot.size(), false);
    for (const auto& [key, value] : r.items()) {
      auto it = index.find(key);
      if (it == index.end()) throw DomainError("rotation names unknown vertex '" + key + "'");
      if (!value.is_array()) throw DomainError("rotation entries must be arrays");
      const bool nested = !value.empty() && value.front().is_array();
      std::vector<Sector> sectors;
      if (nested) {
        for (const auto& s : value) sectors.push_back(s.get<Sector>());
      } else {
        sectors.push_back(value.get<Sector>());
      }
      rot[it->second] = std::move(sectors);
      given[it->second] = true;
    }
    // Vertices without an entry have no edges: one empty sector per gap.
    for (std::size_t v = 0; v < rot.size(); ++v) {
      if (!given[v]) {
        std::size_t k = v < boundary.size() ? boundary[v].labels.size() : 1;
        rot[v].assign(k, Sector{});
      }
    }
    rotation = std::move(rot);
  }

  return CircularNetwork(n, std::move(boundary), std::move(interior), std::move(edges),
                         std::move(rotation));
}

nlohmann::json network_to_json(const CircularNetwork& net) {
  nlohmann::json j;
  j["n"] = net.n();
  auto boundary = nlohmann::json::array();
  for (const auto& bv : net.boundary()) boundary.push_back({{"id", bv.id}, {"labels", bv.labels}});
  j["boundary"] = std::move(boundary);
  j["interior"] = net.interior();
  auto edges = nlohmann::json::array();
  for (const auto& e : net.edges()) {
    edges.push_back({{"u", net.vertex_id(e.u)}, {"v", net.vertex_id(e.v)}, {"c", e.conductance.to_string()}});
  }
  j["edges"] = std::move(edges);
  if (net.rotation()) {
    nlohmann::json rot = nlohmann::json::object();
    for (std::size_t v = 0; v < net.vertex_count(); ++v) {
      const auto& sectors = (*net.rotation())[v];
      if (sectors.size() == 1) {
        rot[net.vertex_id(v)] = sectors.front();
      } else {
        rot[net.vertex_id(v)] = sectors;
      }
    }
    j["rotation"] = std::move(rot);
  }
  return j;
}

CircularNetwork parse_network(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
  return network_from_json(j);
}

std::string serialize_network(const CircularNetwork& net) { return network_to_json(net).dump(2); }

std::vector<std::vector<std::size_t>> connected_components(const CircularNetwork& net) {
  std::vector<std::size_t> parent(net.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : net.edges()) {
    auto a = find(e.u);
    auto b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < net.vertex_count(); ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

}  // namespace circuitsplit
