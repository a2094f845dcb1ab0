#pragma once

// A support set A_i: an ordered list of distinct lattice points in Z^n.

#include "mdisc/numeric.hpp"
#include "mdisc/polygon.hpp"

#include <string>
#include <vector>

namespace mdisc {

struct PointConfig {
  Index dim = 0;
  MatXi points;  // dim x count, columns in input order
  std::string label;

  Index count() const { return points.cols(); }
};

PointConfig make_config(Index dim, const std::vector<std::vector<long>>& pts,
                        std::string label = "");

// throws InputError on empty or duplicated points
void validate(const PointConfig& c);

// dimension of the affine span of the points
Index affine_dim(const PointConfig& c);
bool full_dimensional(const PointConfig& c);

// index in Z^dim of the lattice of differences a - a0; equals the gcd of the
// maximal minors of the (1; points) lift
Int affine_lattice_index(const PointConfig& c);

// 2-d helpers
std::vector<LatticePoint> planar_points(const PointConfig& c);
Polygon hull_of(const PointConfig& c);

PointConfig translated(const PointConfig& c, const VecXi& t);
PointConfig transformed(const PointConfig& c, const MatXi& unimodular);
PointConfig without_point(const PointConfig& c, Index col);

// every lattice point of the hull lies in the configuration (2-d only)
bool is_dense(const PointConfig& c);

bool contains_point(const PointConfig& c, const VecXi& p);

}  // namespace mdisc
