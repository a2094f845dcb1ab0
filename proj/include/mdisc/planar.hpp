#pragma once

// Closed-form bidegree of the mixed discriminant cycle for two planar
// configurations, its edge/vertex ingredients, the principal-determinant
// bidegree, the geometric upper bound, the one-dimensional degenerate case,
// and the defectiveness classification for full-dimensional pairs.

#include "mdisc/numeric.hpp"
#include "mdisc/point_config.hpp"
#include "mdisc/polygon.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace mdisc {

struct EdgeData {
  LatticePoint a, b;          // endpoints, ccw along the hull
  LatticePoint inner_normal;  // primitive; <normal, .> is minimal exactly on the edge
  Int length;                 // lattice length l(e)
  Int height;                 // u(e, A): smallest normal gap to a point off the edge
  std::vector<Index> on_edge;  // columns of the configuration lying on the edge
};

// One entry per hull edge of a full-dimensional planar configuration.
// Throws InputError("not full-dimensional") on degenerate hulls.
std::vector<EdgeData> edge_data(const PointConfig& a);

struct ParallelPair {
  EdgeData edge1;  // from A1
  EdgeData edge2;  // from A2
};

// Pairs of edges with identical primitive inner normals.
std::vector<ParallelPair> strongly_parallel_pairs(const PointConfig& a1,
                                                  const PointConfig& a2);

// MV(Q_i, Q_other) - MV(conv(A_i minus v), Q_other); zero for non-vertices.
Int mixed_multiplicity(const LatticePoint& v, const PointConfig& ai,
                       const PointConfig& aother);

struct Bidegree {
  std::array<Int, 2> cycle;    // degrees of the discriminant cycle
  std::array<Int, 2> reduced;  // cycle / i(A)
  Int lattice_index;
  bool defective = false;
};

// Bidegree of the mixed discriminant cycle of two full-dimensional planar
// configurations. Internally assembled along two independent routes (the
// direct formula and the principal-determinant factorization) which must
// agree exactly. Throws InputError for one-dimensional inputs, pointing at
// one_dim_degree.
Bidegree planar_bidegree(const PointConfig& a1, const PointConfig& a2);

// Bidegree of the principal determinant cycle:
// (3 area(Q1) + area(Q2) + 2 MV, area(Q1) + 3 area(Q2) + 2 MV).
std::pair<Int, Int> principal_bidegree(const PointConfig& a1, const PointConfig& a2);

struct BidegreeBound {
  std::array<Int, 2> bound;  // area(Q_j) + 2 MV - perim(Q_j) componentwise
  bool smooth_condition = false;     // unit lattice indices + three smooth toric surfaces
  bool fan_dense_condition = false;  // equal normal fans and one dense configuration
};

// Upper bound for the cycle bidegree; either reported condition forces equality.
BidegreeBound bidegree_upper_bound(const PointConfig& a1, const PointConfig& a2);

struct OneDimReport {
  Int delta2;  // degree in the one-dimensional block
  bool defective = false;
  std::string tag;  // no-parallel-edge | pyramid | two-parallel-edges | positive-degree
};

// A1 full-dimensional, hull(A2) a segment:
// delta2 = area(Q1) - sum over edges of Q1 parallel to Q2 of u(e,A1) l(e).
// The degree in the first block is not available on this route.
OneDimReport one_dim_degree(const PointConfig& a1, const PointConfig& a2);

struct DefectivenessReport {
  bool defective = false;
  std::string tag;
};

// Full-dimensional pair is defective iff both configurations consist of
// exactly their three hull vertices and the hulls are lattice translates.
DefectivenessReport planar_defective(const PointConfig& a1, const PointConfig& a2);

// Degree of the discriminant cycle of a one-dimensional support
// {p_0 < ... < p_k}: 2(p_k - p_0) - (p_1 - p_0) - (p_k - p_{k-1}), and 0 for
// fewer than three distinct points.
Int univariate_cycle_degree(std::vector<Int> positions);

// Smoothness of the toric surface of a full-dimensional planar configuration:
// at every hull vertex the first configuration points along the two incident
// edges span the unit lattice.
bool smooth_toric_surface(const PointConfig& a);

// Configuration of all pairwise sums (deduplicated); supports the smoothness
// test for Q1 + Q2.
PointConfig pointwise_sum(const PointConfig& a1, const PointConfig& a2);

// Second route for the cycle bidegree via the principal-determinant
// factorization; exposed for the consistency tests.
std::array<Int, 2> bidegree_via_factorization(const PointConfig& a1,
                                              const PointConfig& a2);

}  // namespace mdisc
