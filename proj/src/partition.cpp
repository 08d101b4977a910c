#include "circuitsplit/partition.hpp"

#include <algorithm>

namespace circuitsplit {

bool is_noncrossing(const SetPartition& blocks) {
  for (std::size_t x = 0; x < blocks.size(); ++x) {
    for (std::size_t y = 0; y < blocks.size(); ++y) {
      if (x == y) continue;
      // a < b < c < d with a, c in X and b, d in Y.
      for (int a : blocks[x]) {
        for (int c : blocks[x]) {
          if (c <= a) continue;
          bool inside = false;
          bool outside = false;
          for (int b : blocks[y]) {
            if (a < b && b < c) inside = true;
            else outside = true;
          }
          if (inside && outside) return false;
        }
      }
    }
  }
  return true;
}

SetPartition canonical_partition(SetPartition blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  blocks.erase(std::remove_if(blocks.begin(), blocks.end(), [](const Block& b) { return b.empty(); }),
               blocks.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

namespace {

// Standard recursion: the block containing the smallest remaining label
// splits the rest into independent intervals.
void extend(const std::vector<int>& labels, std::vector<SetPartition>& out) {
  if (labels.empty()) {
    out.push_back({});
    return;
  }
  const int k = static_cast<int>(labels.size());
  // Choose the block of labels[0] as a subset containing index 0; the gaps
  // between chosen indices are filled recursively.
  for (unsigned mask = 1; mask < (1u << k); mask += 2) {
    Block block;
    std::vector<std::vector<int>> gaps;
    std::vector<int> current;
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) {
        block.push_back(labels[i]);
        if (!current.empty()) gaps.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(labels[i]);
      }
    }
    if (!current.empty()) gaps.push_back(std::move(current));

    std::vector<SetPartition> partial = {{block}};
    for (const auto& gap : gaps) {
      std::vector<SetPartition> sub;
      extend(gap, sub);
      std::vector<SetPartition> next;
      for (const auto& p : partial) {
        for (const auto& s : sub) {
          SetPartition merged = p;
          merged.insert(merged.end(), s.begin(), s.end());
          next.push_back(std::move(merged));
        }
      }
      partial = std::move(next);
    }
    for (auto& p : partial) out.push_back(std::move(p));
  }
}

}  // namespace

std::vector<SetPartition> noncrossing_partitions(int n) {
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  std::vector<SetPartition> out;
  extend(labels, out);
  for (auto& p : out) p = canonical_partition(std::move(p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace circuitsplit
