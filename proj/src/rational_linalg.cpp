#include "circuitsplit/detail/rational_linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace circuitsplit::detail {

RatMatrix schur_complement(RatMatrix l, std::size_t keep) {
  const std::size_t size = l.size();
  std::vector<bool> alive(size, true);
  for (std::size_t k = size; k-- > keep;) {
    alive[k] = false;
    const mpq_class pivot = l[k][k];
    if (sgn(pivot) == 0) continue;
    if (sgn(pivot) < 0) throw std::logic_error("negative Laplacian pivot");
    std::vector<std::size_t> nbrs;
    for (std::size_t i = 0; i < size; ++i) {
      if (alive[i] && sgn(l[i][k]) != 0) nbrs.push_back(i);
    }
    for (std::size_t i : nbrs) {
      const mpq_class factor = l[i][k] / pivot;
      for (std::size_t j : nbrs) l[i][j] -= factor * l[k][j];
    }
  }
  RatMatrix out(keep, std::vector<mpq_class>(keep));
  for (std::size_t i = 0; i < keep; ++i) {
    for (std::size_t j = 0; j < keep; ++j) out[i][j] = l[i][j];
  }
  return out;
}

RatMatrix invert(RatMatrix a) {
  const std::size_t n = a.size();
  RatMatrix inv(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular matrix in exact inverse");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const mpq_class p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const mpq_class f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

ResistanceTable effective_resistance(const RatMatrix& lap) {
  const std::size_t n = lap.size();
  ResistanceTable out;
  out.value.assign(n, std::vector<mpq_class>(n));
  out.component.assign(n, 0);

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sgn(lap[i][j]) != 0) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.component[i] = find(i);
    groups[find(i)].push_back(i);
  }

  for (const auto& members : groups) {
    if (members.size() < 2) continue;
    // Ground members[0]; invert the reduced Laplacian on the others.
    const std::size_t m = members.size() - 1;
    RatMatrix reduced(m, std::vector<mpq_class>(m));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) reduced[a][b] = lap[members[a + 1]][members[b + 1]];
    }
    const RatMatrix g = invert(std::move(reduced));
    auto green = [&](std::size_t a, std::size_t b) -> mpq_class {
      if (a == 0 || b == 0) return 0;
      return g[a - 1][b - 1];
    };
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = 0; b < members.size(); ++b) {
        out.value[members[a]][members[b]] = green(a, a) + green(b, b) - 2 * green(a, b);
      }
    }
  }
  return out;
}

}  // namespace circuitsplit::detail
