#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace circuitsplit::detail {

using RatMatrix = std::vector<std::vector<mpq_class>>;

// Schur complement of a weighted Laplacian onto its first `keep` indices,
// eliminating the rest one vertex at a time. Vertices whose pivot is zero
// when reached are isolated from everything kept and are dropped.
RatMatrix schur_complement(RatMatrix laplacian, std::size_t keep);

// Inverse of a nonsingular matrix by exact Gauss-Jordan elimination.
RatMatrix invert(RatMatrix a);

// Effective resistance between all pairs of vertices of a Laplacian, computed
// per connected component by grounding its first vertex. `value` is only
// meaningful for pairs with equal `component` ids.
struct ResistanceTable {
  RatMatrix value;
  std::vector<std::size_t> component;
};
ResistanceTable effective_resistance(const RatMatrix& laplacian);

}  // namespace circuitsplit::detail
