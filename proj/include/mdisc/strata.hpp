#pragma once

// Tropical matroid stratum fingerprints and fitting of the per-block linear
// degree formula in Plucker coordinates, together with the vanishing forms
// that span its ambiguity.

#include "mdisc/cayley.hpp"
#include "mdisc/matroid.hpp"
#include "mdisc/numeric.hpp"

#include <cstdint>
#include <vector>

namespace mdisc {

struct StratumFingerprint {
  Index m = 0, d = 0;
  std::vector<std::uint32_t> matroid_id;  // sorted bases of M*(A)
  std::vector<FlagChain> chains;          // deterministic enumeration order
  std::vector<std::vector<int>> signs;    // signs[chain][column] of det(A^T, e_J.., e_i)
};

// Exact signs for every (maximal chain, column) pair under the fixed column
// order (A^T, e_J1, ..., e_J_{m-d-1}, e_i). Requires full rank.
StratumFingerprint fingerprint(const CayleySystem& sys);

// Same dual matroid and identical sign maps. Fingerprints over different
// ground sets are simply unequal.
bool same_stratum(const StratumFingerprint& a, const StratumFingerprint& b);

// det(A^T, e_J1, ..., e_J_{m-d-1}, e_i) expanded as an integer linear form in
// the Plucker coordinates (Laplace along the indicator columns). Independent
// of the matrix entries; subsets must be all_subsets(m, d).
std::vector<Int> chain_minor_form(Index m, Index d, const FlagChain& chain, Index col,
                                  const std::vector<std::vector<int>>& subsets);

// The linear forms on the Plucker coordinates obtained as coordinates of
// xi ^ e_{I_j}; they vanish on the Plucker vector of every Cayley system with
// the given block structure. One row per (block, (d+1)-subset) pair.
MatXi vanishing_forms(Index m, Index d,
                      const std::vector<std::pair<Index, Index>>& blocks,
                      const std::vector<std::vector<int>>& subsets);

struct DegreeFormula {
  Index m = 0, d = 0;
  int block = 0;
  std::vector<std::vector<int>> subsets;  // d-subsets of [m], lexicographic
  std::vector<Rat> coeffs;                // minimal-norm representative
  MatXi vanishing_basis;                  // integer basis rows of the ambiguity

  Rat evaluate(const PluckerVector& pv) const;
};

// Fits the linear degree formula of one block on co-stratal samples. The
// support and signs of the formula come from a ray shoot on the first sample;
// every sample must then be reproduced exactly, else
// StratumFitError("no linear fit - check stratum") is thrown. The returned
// representative is the unique minimal Euclidean norm element of its coset
// modulo the span of the vanishing forms. When a held-out sample is supplied
// its degree must also be reproduced exactly.
DegreeFormula fit_degree_formula(
    const std::vector<std::pair<CayleySystem, std::vector<Int>>>& samples, int block,
    const std::pair<CayleySystem, std::vector<Int>>* holdout = nullptr);

}  // namespace mdisc
