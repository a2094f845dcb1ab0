#pragma once

// Ray-shooting degree computation: generic weight selection, exact cone
// membership tests in the Gale dual, per-column initial-monomial exponents,
// per-block cycle degrees, and a defectiveness verdict.

#include "mdisc/cayley.hpp"
#include "mdisc/matroid.hpp"
#include "mdisc/numeric.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mdisc {

// Integer weight vector drawn uniformly from [-10^6, 10^6] by a seeded
// mt19937_64; `attempt` advances the stream deterministically for retries.
VecXi generic_weight(Index m, std::uint64_t seed, int attempt = 0);

struct WeightCertificate {
  VecXi w;
  std::uint64_t seed = 0;
  int retries = 0;
};

struct RayShootResult {
  enum class Status { ok, defective, degenerate };
  Status status = Status::ok;
  VecXi w;
  std::vector<Int> exponents;      // per column: exponent of x_i in in_w
  std::vector<Int> block_degrees;  // per block: sum of exponents

  struct Contribution {
    int chain;    // index into the matroid's maximal_chains()
    int column;
    Int amount;   // |det(A^T, e_J1, ..., e_i)|, always positive
    int sign;     // sign of the same determinant
  };
  std::vector<Contribution> contributions;
};

// One ray shoot at fixed weight w. Requires full row rank and the all-ones
// vector in the row span. Chains whose sigma system is singular with b_i are
// skipped; an exactly-zero Cramer coordinate flags the weight degenerate.
RayShootResult ray_shoot(const MatXi& a,
                         const std::vector<std::pair<Index, Index>>& blocks,
                         const VecXi& w);
RayShootResult ray_shoot(const MatXi& a,
                         const std::vector<std::pair<Index, Index>>& blocks,
                         const VecXi& w, const DualMatroid& matroid);

struct TropicalDegree {
  enum class Status { ok, defective, degenerate };
  Status status = Status::ok;
  std::vector<Int> cycle;    // per-block degrees of the discriminant cycle
  std::vector<Int> reduced;  // cycle / i(A)
  Int lattice_index;
  WeightCertificate certificate;
};

// Runs three independently seeded ray shoots (with retry on degeneracy) and
// requires identical block degrees; exact arithmetic makes disagreement an
// internal bug, reported as std::logic_error("instability: report bug").
// Refuses instances with m - 2n > 8 or m > 24 unless the gate is overridden.
TropicalDegree tropical_degree(const CayleySystem& sys, std::uint64_t seed = 0,
                               bool override_size_gate = false);

struct DefectVerdict {
  bool defective = false;
  std::string method;  // planar-exact | planar-onedim-exact | monte-carlo | degenerate-rank
  bool certified = false;
};

// Exact planar classification when available; Monte Carlo over `trials`
// weights otherwise (one-sided, never reported as certified).
DefectVerdict is_defective(const CayleySystem& sys, std::uint64_t seed = 0,
                           int trials = 5, bool override_size_gate = false);

// Throws SizeGateError when m - d > 8 or m > 24 and the override is not set.
void check_size_gate(Index m, Index d, bool override_size_gate);

// retry budget for generic weight selection
inline constexpr int kGenericityRetryLimit = 32;

}  // namespace mdisc
