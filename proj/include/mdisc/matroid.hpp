#pragma once

// Gale duality and the dual matroid M*(A): exact rank/closure oracles on the
// Gale vector configuration, flats by rank, and maximal chains of flats (the
// fine simplicial fan structure on the tropical linear space).

#include "mdisc/numeric.hpp"

#include <cstdint>
#include <vector>

namespace mdisc {

struct GaleDual {
  MatXi beta;  // corank x m; rows are a primitive kernel basis, column j is b_j

  Index m() const { return beta.cols(); }
  Index corank() const { return beta.rows(); }
};

// Deterministic Gale dual from the primitive kernel lattice basis of a full
// row rank matrix. Throws InputError("rank deficient") otherwise.
GaleDual gale_dual(const MatXi& a);

// Chain of flats J_1 ⊂ ... ⊂ J_{corank-1}, rank(J_k) = k, as bitmasks.
using FlagChain = std::vector<std::uint32_t>;

class DualMatroid {
 public:
  explicit DualMatroid(GaleDual gale);

  Index ground_size() const { return gale_.m(); }
  Index rank() const { return gale_.corank(); }
  const GaleDual& gale() const { return gale_; }

  // exact rank of {b_j : j in set}; stateless, safe for concurrent use
  int rank_of_subset(std::uint32_t set) const;
  // smallest flat containing set
  std::uint32_t closure(std::uint32_t set) const;

  // all flats of the given rank, sorted by bitmask value
  std::vector<std::uint32_t> flats_of_rank(int k) const;

  // every maximal chain of proper nonempty flats, ranks 1..corank-1, in
  // lexicographic order; corank 1 yields the single empty chain
  const std::vector<FlagChain>& maximal_chains() const { return chains_; }

  // canonical identifier: all corank-subsets of full rank, sorted
  std::vector<std::uint32_t> bases() const;

 private:
  GaleDual gale_;
  std::vector<std::vector<std::uint32_t>> flats_by_rank_;
  std::vector<FlagChain> chains_;
};

}  // namespace mdisc
