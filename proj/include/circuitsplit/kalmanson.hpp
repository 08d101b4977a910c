#pragma once

#include <array>
#include <optional>
#include <vector>

#include "circuitsplit/error.hpp"
#include "circuitsplit/matrix.hpp"
#include "circuitsplit/split_system.hpp"
#include "json.hpp"

namespace circuitsplit {

using CyclicOrder = std::vector<int>;

CyclicOrder clockwise_order(int n);

struct KalmansonReport {
  bool kalmanson = true;
  // Labels i, j, k, l in cyclic order with
  // max(W_ij + W_kl, W_jk + W_il) > W_ik + W_jl.
  std::optional<std::array<int, 4>> witness;
};

// Dissimilarity matrices are indexed by label (row i-1 for label i).
// Entries of +inf separate finite blocks; the quadruple condition is checked
// inside each block. Throws on asymmetric, negative or non-block input.
KalmansonReport is_kalmanson(const ExtMatrix& w, const CyclicOrder& order);

// Circular split system whose split metric equals `w` (finite, Kalmanson
// in `order`). Zero-weight splits are dropped. The result uses `order`.
WeightedSplitSystem split_decomposition(const ExtMatrix& w, const CyclicOrder& order);

// d(i, j) = total weight of splits separating i and j, indexed by the
// system's labels in increasing order.
ExtMatrix metric_of_splits(const WeightedSplitSystem& s);

// n x n metric of a compactified system: split metric inside each part,
// +inf between parts.
ExtMatrix metric_of_splits(const CompactifiedSplitSystem& s);

// First cyclic order (fixed at label 1, reflections skipped, lexicographic)
// for which `w` is Kalmanson.
std::optional<CyclicOrder> find_circular_order(const ExtMatrix& w, const Limits& limits = {});

nlohmann::json kalmanson_report_to_json(const KalmansonReport& r);

}  // namespace circuitsplit
