#pragma once

#include <vector>

namespace circuitsplit {

using Block = std::vector<int>;
using SetPartition = std::vector<Block>;

// True if no two blocks interleave as a < b < c < d with a, c in one block
// and b, d in another. Labels are compared as integers, so this is the
// clockwise circular order 1..n.
bool is_noncrossing(const SetPartition& blocks);

// Blocks sorted internally and ordered by minimum element.
SetPartition canonical_partition(SetPartition blocks);

// All noncrossing partitions of {1..n}, canonical form, deterministic order.
std::vector<SetPartition> noncrossing_partitions(int n);

}  // namespace circuitsplit
