#include "circuitsplit/kalmanson.hpp"

#include <algorithm>
#include <numeric>

namespace circuitsplit {

namespace {

void check_dissimilarity(const ExtMatrix& w) {
  if (!w.is_symmetric()) throw DomainError("dissimilarity matrix is not symmetric");
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w.at(i, i).is_zero()) throw DomainError("dissimilarity matrix needs a zero diagonal", {{"row", i + 1}});
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w.at(i, j).sign() < 0) {
        throw DomainError("negative dissimilarity", {{"row", i + 1}, {"column", j + 1}});
      }
    }
  }
}

void check_order(const CyclicOrder& order, std::size_t n) {
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expect(n);
  std::iota(expect.begin(), expect.end(), 1);
  if (sorted != expect) throw DomainError("cyclic order must be a permutation of 1..n");
}

// True iff the quadruple (a, b, c, d), listed in cyclic order, satisfies
// the Kalmanson inequality.
bool quadruple_ok(const ExtMatrix& w, int a, int b, int c, int d) {
  auto e = [&](int x, int y) -> const mpq_class& { return w.label(x, y).value(); };
  const mpq_class rhs = e(a, c) + e(b, d);
  return e(a, b) + e(c, d) <= rhs && e(b, c) + e(a, d) <= rhs;
}

}  // namespace

CyclicOrder clockwise_order(int n) {
  CyclicOrder o(n);
  std::iota(o.begin(), o.end(), 1);
  return o;
}

KalmansonReport is_kalmanson(const ExtMatrix& w, const CyclicOrder& order) {
  check_dissimilarity(w);
  check_order(order, w.size());
  auto finite = [&](int x, int y) { return w.label(x, y).is_finite(); };
  const std::size_t n = order.size();
  // Finite entries must be transitive for blocks to exist.
  for (int x = 1; x <= static_cast<int>(n); ++x) {
    for (int y = 1; y <= static_cast<int>(n); ++y) {
      for (int z = 1; z <= static_cast<int>(n); ++z) {
        if (finite(x, y) && finite(y, z) && !finite(x, z)) {
          throw DomainError("finite entries of the matrix do not form blocks", {{"labels", {x, y, z}}});
        }
      }
    }
  }
  KalmansonReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!finite(order[i], order[j])) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!finite(order[i], order[k])) continue;
        for (std::size_t l = k + 1; l < n; ++l) {
          if (!finite(order[i], order[l])) continue;
          if (!quadruple_ok(w, order[i], order[j], order[k], order[l])) {
            report.kalmanson = false;
            report.witness = std::array<int, 4>{order[i], order[j], order[k], order[l]};
            return report;
          }
        }
      }
    }
  }
  return report;
}

WeightedSplitSystem split_decomposition(const ExtMatrix& w, const CyclicOrder& order) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w.at(i, j).is_infinite()) {
        throw DomainError("split decomposition needs a finite matrix; decompose blocks separately",
                          {{"row", i + 1}, {"column", j + 1}});
      }
    }
  }
  const auto report = is_kalmanson(w, order);
  if (!report.kalmanson) {
    throw DomainError("matrix is not Kalmanson in the given order", {{"witness", *report.witness}});
  }
  const std::size_t n = order.size();
  auto d = [&](std::size_t p, std::size_t q) -> const mpq_class& {
    return w.label(order[p % n], order[q % n]).value();
  };
  std::vector<Split> splits;
  // Split between the gap after position a and the gap after position b.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      mpq_class alpha = d(a, b) + d(a + 1, b + 1) - d(a, b + 1) - d(a + 1, b);
      alpha /= 2;
      if (sgn(alpha) == 0) continue;
      if (sgn(alpha) < 0) throw std::logic_error("negative isolation index on a Kalmanson matrix");
      std::vector<int> side(order.begin() + static_cast<long>(a) + 1, order.begin() + static_cast<long>(b) + 1);
      splits.push_back({std::move(side), ExtRat(alpha)});
    }
  }
  return WeightedSplitSystem(order, std::move(splits));
}

ExtMatrix metric_of_splits(const WeightedSplitSystem& s) {
  const auto labels = s.labels();
  const std::size_t k = labels.size();
  ExtMatrix m(k);
  for (const auto& sp : s.splits()) {
    std::vector<bool> in(k, false);
    for (std::size_t i = 0; i < k; ++i) in[i] = std::binary_search(sp.side.begin(), sp.side.end(), labels[i]);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (in[i] != in[j]) m.at(i, j) += sp.weight;
      }
    }
  }
  return m;
}

ExtMatrix metric_of_splits(const CompactifiedSplitSystem& s) {
  ExtMatrix m(static_cast<std::size_t>(s.n()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i != j) m.at(i, j) = ExtRat::inf();
    }
  }
  for (const auto& part : s.parts()) {
    const auto labels = part.labels();
    const auto block = metric_of_splits(part);
    for (std::size_t a = 0; a < labels.size(); ++a) {
      for (std::size_t b = 0; b < labels.size(); ++b) m.at(labels[a] - 1, labels[b] - 1) = block.at(a, b);
    }
  }
  return m;
}

std::optional<CyclicOrder> find_circular_order(const ExtMatrix& w, const Limits& limits) {
  const int n = static_cast<int>(w.size());
  if (n > limits.max_order_search_n && !limits.unsafe) {
    throw SizeGuardError("circular order search limited to n <= " + std::to_string(limits.max_order_search_n),
                         {{"n", n}});
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w.at(i, j).is_infinite()) throw DomainError("circular order search needs a finite matrix");
    }
  }
  check_dissimilarity(w);
  CyclicOrder order = clockwise_order(n);
  if (n <= 3) return order;
  do {
    if (order[1] > order[n - 1]) continue;  // reflection of an earlier order
    if (is_kalmanson(w, order).kalmanson) return order;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return std::nullopt;
}

nlohmann::json kalmanson_report_to_json(const KalmansonReport& r) {
  nlohmann::json j;
  j["kalmanson"] = r.kalmanson;
  j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr);
  return j;
}

}  // namespace circuitsplit
