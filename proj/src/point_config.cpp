#include "mdisc/point_config.hpp"

#include "mdisc/exact_linalg.hpp"

#include <set>
#include <vector>

namespace mdisc {

PointConfig make_config(Index dim, const std::vector<std::vector<long>>& pts,
                        std::string label) {
  PointConfig c;
  c.dim = dim;
  c.label = std::move(label);
  c.points.resize(dim, static_cast<Index>(pts.size()));
  for (size_t j = 0; j < pts.size(); ++j) {
    if (static_cast<Index>(pts[j].size()) != dim)
      throw InputError("make_config: point dimension mismatch");
    for (Index i = 0; i < dim; ++i) c.points(i, static_cast<Index>(j)) = Int(pts[j][i]);
  }
  validate(c);
  return c;
}

void validate(const PointConfig& c) {
  if (c.count() < 1) throw InputError("configuration must contain a point");
  if (c.points.rows() != c.dim) throw InputError("configuration dimension mismatch");
  std::set<std::vector<Int>> seen;
  for (Index j = 0; j < c.count(); ++j) {
    std::vector<Int> p(c.dim);
    for (Index i = 0; i < c.dim; ++i) p[i] = c.points(i, j);
    if (!seen.insert(p).second) throw InputError("duplicate point in configuration");
  }
}

Index affine_dim(const PointConfig& c) {
  if (c.count() <= 1) return 0;
  MatXi diffs(c.dim, c.count() - 1);
  for (Index j = 1; j < c.count(); ++j) diffs.col(j - 1) = c.points.col(j) - c.points.col(0);
  return rank_of(diffs);
}

bool full_dimensional(const PointConfig& c) { return affine_dim(c) == c.dim; }

Int affine_lattice_index(const PointConfig& c) {
  MatXi lift(c.dim + 1, c.count());
  for (Index j = 0; j < c.count(); ++j) {
    lift(0, j) = 1;
    for (Index i = 0; i < c.dim; ++i) lift(i + 1, j) = c.points(i, j);
  }
  return gcd_maximal_minors(lift);
}

std::vector<LatticePoint> planar_points(const PointConfig& c) {
  if (c.dim != 2) throw InputError("planar operation on non-planar configuration");
  std::vector<LatticePoint> out;
  out.reserve(c.count());
  for (Index j = 0; j < c.count(); ++j) {
    LatticePoint p;
    p << c.points(0, j), c.points(1, j);
    out.push_back(p);
  }
  return out;
}

Polygon hull_of(const PointConfig& c) { return convex_hull(planar_points(c)); }

PointConfig translated(const PointConfig& c, const VecXi& t) {
  PointConfig out = c;
  for (Index j = 0; j < out.count(); ++j) out.points.col(j) += t;
  return out;
}

PointConfig transformed(const PointConfig& c, const MatXi& unimodular) {
  PointConfig out = c;
  out.points = unimodular * c.points;
  return out;
}

PointConfig without_point(const PointConfig& c, Index col) {
  PointConfig out = c;
  out.points.resize(c.dim, c.count() - 1);
  for (Index j = 0, k = 0; j < c.count(); ++j) {
    if (j == col) continue;
    out.points.col(k++) = c.points.col(j);
  }
  return out;
}

bool is_dense(const PointConfig& c) {
  if (c.dim != 2) throw InputError("is_dense: 2-d only");
  Polygon hull = hull_of(c);
  Int xmin = c.points.row(0).minCoeff(), xmax = c.points.row(0).maxCoeff();
  Int ymin = c.points.row(1).minCoeff(), ymax = c.points.row(1).maxCoeff();
  for (Int x = xmin; x <= xmax; ++x)
    for (Int y = ymin; y <= ymax; ++y) {
      LatticePoint q;
      q << x, y;
      if (!point_in_polygon(hull, q)) continue;
      VecXi v(2);
      v << x, y;
      if (!contains_point(c, v)) return false;
    }
  return true;
}

bool contains_point(const PointConfig& c, const VecXi& p) {
  for (Index j = 0; j < c.count(); ++j) {
    bool same = true;
    for (Index i = 0; i < c.dim; ++i)
      if (c.points(i, j) != p(i)) { same = false; break; }
    if (same) return true;
  }
  return false;
}

}  // namespace mdisc
