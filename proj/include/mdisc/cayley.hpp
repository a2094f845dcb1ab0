#pragma once

// Cayley systems: the 2n x m matrix stacking block indicator rows over the
// lifted configurations, the block partition, the lattice index i(A), and the
// Plucker coordinate vector of the row space.

#include "mdisc/numeric.hpp"
#include "mdisc/point_config.hpp"

#include <utility>
#include <vector>

namespace mdisc {

struct CayleySystem {
  std::vector<PointConfig> configs;
  MatXi matrix;                                 // 2n x m
  std::vector<std::pair<Index, Index>> blocks;  // [begin, end) column ranges
  Int lattice_index;                            // i(A); 0 when degenerate
  bool degenerate = false;                      // rank < 2n

  Index n() const { return static_cast<Index>(configs.size()); }
  Index m() const { return matrix.cols(); }
  Index d() const { return matrix.rows(); }
  int block_of(Index col) const;
};

// Columns keep block order and in-block input order; that column order fixes
// every sign convention downstream. Throws InputError on mixed dimensions or
// when the number of configurations differs from their common dimension.
// Rank-deficient matrices are flagged degenerate, not rejected.
CayleySystem build_cayley(const std::vector<PointConfig>& configs);

struct PluckerVector {
  Index m = 0, d = 0;
  std::vector<std::vector<int>> subsets;  // d-subsets of [m], lexicographic
  std::vector<Int> values;                // minors, ascending column order

  Int gcd_abs() const;
  const Int& value_at(const std::vector<int>& subset) const;
};

// All C(m, 2n) maximal minors; gcd of absolute values equals i(A) for
// non-degenerate systems, all zeros for degenerate ones.
PluckerVector plucker(const CayleySystem& sys);

}  // namespace mdisc
