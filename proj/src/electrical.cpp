#include "circuitsplit/electrical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "circuitsplit/detail/rational_linalg.hpp"
#include "circuitsplit/error.hpp"

namespace circuitsplit {

namespace {

using detail::RatMatrix;

RatMatrix vertex_laplacian(const CircularNetwork& net) {
  const std::size_t size = net.vertex_count();
  RatMatrix l(size, std::vector<mpq_class>(size));
  for (const auto& e : net.edges()) {
    if (e.is_loop()) continue;
    const mpq_class& c = e.conductance.value();
    l[e.u][e.u] += c;
    l[e.v][e.v] += c;
    l[e.u][e.v] -= c;
    l[e.v][e.u] -= c;
  }
  return l;
}

// Kron-reduced Laplacian over boundary vertices.
RatMatrix boundary_laplacian(const CircularNetwork& net) {
  return detail::schur_complement(vertex_laplacian(net), net.boundary().size());
}

// Label classes (one per vertex) and the boundary Laplacian over them.
struct Quotient {
  std::vector<std::vector<int>> classes;  // ordered by smallest label
  std::vector<std::size_t> class_of;      // label-1 -> class
  RatMatrix laplacian;
};

Quotient quotient_from_network(const CircularNetwork& net) {
  Quotient q;
  q.class_of.assign(net.n(), 0);
  for (std::size_t v = 0; v < net.boundary().size(); ++v) {
    q.classes.push_back(net.boundary()[v].labels);
    for (int l : net.boundary()[v].labels) q.class_of[l - 1] = v;
  }
  q.laplacian = boundary_laplacian(net);
  return q;
}

Quotient quotient_from_response(const ExtMatrix& m) {
  validate_response_matrix(m);
  const int n = static_cast<int>(m.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (m.at(i, j).kind() == ExtRat::Kind::PosInf) parent[find(i)] = find(j);
    }
  }
  Quotient q;
  q.class_of.assign(n, 0);
  std::map<int, std::size_t> root_to_class;
  for (int i = 0; i < n; ++i) {
    auto [it, fresh] = root_to_class.emplace(find(i), q.classes.size());
    if (fresh) q.classes.emplace_back();
    q.classes[it->second].push_back(i + 1);
    q.class_of[i] = it->second;
  }
  const std::size_t k = q.classes.size();
  q.laplacian.assign(k, std::vector<mpq_class>(k));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::size_t a = q.class_of[i];
      std::size_t b = q.class_of[j];
      if (a == b) continue;
      q.laplacian[a][b] -= m.at(i, j).value();
      q.laplacian[a][a] += m.at(i, j).value();
    }
  }
  return q;
}

ExtMatrix response_from_quotient(const Quotient& q) {
  const std::size_t n = q.class_of.size();
  ExtMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      std::size_t a = q.class_of[i];
      std::size_t b = q.class_of[j];
      if (a == b) {
        m.at(i, j) = ExtRat::inf();
        continue;
      }
      mpq_class g = -q.laplacian[a][b];
      g /= static_cast<long>(q.classes[a].size() * q.classes[b].size());
      m.at(i, j) = ExtRat(g);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (q.classes[q.class_of[i]].size() > 1) {
      m.at(i, i) = ExtRat::neg_inf();
      continue;
    }
    mpq_class sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) sum += m.at(i, j).value();
    }
    m.at(i, i) = ExtRat(mpq_class(-sum));
  }
  return m;
}

ExtMatrix resistance_from_quotient(const Quotient& q) {
  const auto table = detail::effective_resistance(q.laplacian);
  const std::size_t n = q.class_of.size();
  ExtMatrix w(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t a = q.class_of[i];
      std::size_t b = q.class_of[j];
      if (a == b) continue;
      if (table.component[a] != table.component[b]) {
        w.at(i, j) = ExtRat::inf();
      } else {
        w.at(i, j) = ExtRat(table.value[a][b]);
      }
    }
  }
  return w;
}

}  // namespace

LaplacianView laplacian(const CircularNetwork& net) {
  const auto l = vertex_laplacian(net);
  LaplacianView view{ExtMatrix(l.size()), net.boundary().size()};
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = 0; j < l.size(); ++j) view.matrix.at(i, j) = ExtRat(l[i][j]);
  }
  return view;
}

ExtMatrix response_matrix(const CircularNetwork& net) {
  return response_from_quotient(quotient_from_network(net));
}

ReducedNetwork reduced_from_response(const ExtMatrix& m) {
  ReducedNetwork r{static_cast<int>(m.size()), {}};
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!m.at(i, j).is_zero()) {
        r.edges.push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1, m.at(i, j)});
      }
    }
  }
  return r;
}

ReducedNetwork kron_reduce(const CircularNetwork& net) { return reduced_from_response(response_matrix(net)); }

ExtMatrix resistance_matrix(const CircularNetwork& net) {
  return resistance_from_quotient(quotient_from_network(net));
}

ExtMatrix resistance_matrix(const ExtMatrix& response) {
  return resistance_from_quotient(quotient_from_response(response));
}

bool equivalent(const CircularNetwork& a, const CircularNetwork& b) {
  if (a.n() != b.n()) {
    throw DomainError("networks have different label counts", {{"n", {a.n(), b.n()}}});
  }
  return response_matrix(a) == response_matrix(b);
}

void validate_response_matrix(const ExtMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw DomainError("empty response matrix");
  if (!m.is_symmetric()) throw DomainError("response matrix is not symmetric");
  for (std::size_t i = 0; i < n; ++i) {
    bool row_has_inf = false;
    mpq_class sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto& x = m.at(i, j);
      if (x.kind() == ExtRat::Kind::NegInf || x.sign() < 0) {
        throw DomainError("negative off-diagonal response entry",
                          {{"row", i + 1}, {"column", j + 1}, {"value", x.to_string()}});
      }
      if (x.is_infinite()) {
        row_has_inf = true;
      } else {
        sum += x.value();
      }
    }
    const auto& d = m.at(i, i);
    if (row_has_inf) {
      if (d.kind() != ExtRat::Kind::NegInf) {
        throw DomainError("row with +inf entries needs -inf on the diagonal", {{"row", i + 1}});
      }
    } else if (!d.is_finite() || d.value() + sum != 0) {
      throw DomainError("response matrix row does not sum to zero", {{"row", i + 1}});
    }
  }
  // +inf must be an equivalence relation on labels.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || m.at(i, j).kind() != ExtRat::Kind::PosInf) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i && k != j && m.at(j, k).kind() == ExtRat::Kind::PosInf &&
            m.at(i, k).kind() != ExtRat::Kind::PosInf) {
          throw DomainError("+inf entries do not form label classes",
                            {{"labels", {i + 1, j + 1, k + 1}}});
        }
      }
    }
  }
}

CircularNetwork reduced_to_network(const ReducedNetwork& reduced) {
  ExtMatrix m(static_cast<std::size_t>(reduced.n));
  for (const auto& e : reduced.edges) {
    m.at(e.i - 1, e.j - 1) = e.weight;
    m.at(e.j - 1, e.i - 1) = e.weight;
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    bool inf = false;
    mpq_class sum = 0;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j == i) continue;
      if (m.at(i, j).is_infinite()) inf = true;
      else sum += m.at(i, j).value();
    }
    m.at(i, i) = inf ? ExtRat::neg_inf() : ExtRat(mpq_class(-sum));
  }
  const Quotient q = quotient_from_response(m);
  std::vector<BoundaryVertex> boundary;
  for (const auto& cls : q.classes) boundary.push_back({"t" + std::to_string(cls.front()), cls});
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < q.classes.size(); ++a) {
    for (std::size_t b = a + 1; b < q.classes.size(); ++b) {
      if (sgn(q.laplacian[a][b]) != 0) edges.push_back({a, b, ExtRat(mpq_class(-q.laplacian[a][b]))});
    }
  }
  return CircularNetwork(reduced.n, std::move(boundary), {}, std::move(edges));
}

nlohmann::json reduced_to_json(const ReducedNetwork& reduced) {
  nlohmann::json j;
  j["n"] = reduced.n;
  auto edges = nlohmann::json::array();
  for (const auto& e : reduced.edges) edges.push_back({{"i", e.i}, {"j", e.j}, {"w", e.weight.to_string()}});
  j["edges"] = std::move(edges);
  return j;
}

}  // namespace circuitsplit
