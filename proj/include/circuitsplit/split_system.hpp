#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "circuitsplit/ext_rational.hpp"
#include "circuitsplit/matrix.hpp"
#include "circuitsplit/partition.hpp"
#include "json.hpp"

namespace circuitsplit {

struct Split {
  std::vector<int> side;  // canonical side: sorted, excludes the smallest label
  ExtRat weight;

  friend bool operator==(const Split&, const Split&) = default;
};

// Circular splits on the labels of `order`, each side an arc of that cyclic
// order. Splits are kept sorted by side and are unique.
class WeightedSplitSystem {
 public:
  WeightedSplitSystem() = default;
  // Canonicalizes sides; throws DomainError on non-circular, duplicate,
  // trivial or nonpositive splits.
  WeightedSplitSystem(std::vector<int> order, std::vector<Split> splits);

  const std::vector<int>& order() const { return order_; }
  const std::vector<Split>& splits() const { return splits_; }
  // Labels in increasing order; metric indices follow this order.
  std::vector<int> labels() const;

  friend bool operator==(const WeightedSplitSystem&, const WeightedSplitSystem&) = default;

 private:
  std::vector<int> order_;
  std::vector<Split> splits_;
};

// Noncrossing partition of [n] with a circular split system on every part
// (each part in clockwise order).
class CompactifiedSplitSystem {
 public:
  CompactifiedSplitSystem() = default;
  CompactifiedSplitSystem(int n, std::vector<WeightedSplitSystem> parts);

  int n() const { return n_; }
  const std::vector<WeightedSplitSystem>& parts() const { return parts_; }
  SetPartition partition() const;
  std::size_t split_count() const;

  friend bool operator==(const CompactifiedSplitSystem&, const CompactifiedSplitSystem&) = default;

 private:
  int n_ = 0;
  std::vector<WeightedSplitSystem> parts_;
};

// Canonical side of `side` relative to the label set `labels` (sorted).
std::vector<int> canonical_side(std::vector<int> side, const std::vector<int>& labels);

// True if `side` is a contiguous arc of the cyclic `order`.
bool is_arc(const std::vector<int>& side, const std::vector<int>& order);

// Every split weight replaced by 1.
WeightedSplitSystem unweighted(const WeightedSplitSystem& s);
CompactifiedSplitSystem unweighted(const CompactifiedSplitSystem& s);

nlohmann::json split_system_to_json(const CompactifiedSplitSystem& s);
CompactifiedSplitSystem split_system_from_json(const nlohmann::json& j);
CompactifiedSplitSystem parse_split_system(const std::string& text);

}  // namespace circuitsplit
