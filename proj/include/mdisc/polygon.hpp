#pragma once

// Exact lattice polygon geometry in Z^2. Degenerate hulls (points, segments)
// are first-class: a Polygon with one vertex is a point, with two a segment.

#include "mdisc/numeric.hpp"

#include <vector>

namespace mdisc {

struct Polygon {
  // counterclockwise vertex cycle, first != last, starting at the
  // lexicographically smallest vertex; strictly convex at every vertex
  std::vector<LatticePoint> verts;

  Index size() const { return static_cast<Index>(verts.size()); }
  bool is_point() const { return verts.size() == 1; }
  bool is_segment() const { return verts.size() == 2; }
  bool full_dimensional() const { return verts.size() >= 3; }
};

// Minimal ccw vertex list of the hull; duplicates in the input are ignored.
Polygon convex_hull(std::vector<LatticePoint> pts);

// Twice the Euclidean area (shoelace); a primitive triangle has area 1.
// Points and segments have area 0.
Int normalized_area(const Polygon& p);

// |boundary ∩ Z^2|: sum of gcds of edge offsets. A segment of lattice length
// l counts l+1 points, a single point counts 1.
Int boundary_lattice_points(const Polygon& p);

Polygon minkowski_sum(const Polygon& a, const Polygon& b);

// Bernstein root count: EuclidArea(a+b) - EuclidArea(a) - EuclidArea(b),
// always a nonnegative integer.
Int mixed_volume2(const Polygon& a, const Polygon& b);

Polygon translate(const Polygon& p, const LatticePoint& t);

bool polygon_equal(const Polygon& a, const Polygon& b);

// Euclidean lattice length of a segment (gcd of coordinate offsets).
Int lattice_length(const LatticePoint& a, const LatticePoint& b);

bool point_in_polygon(const Polygon& p, const LatticePoint& q);  // boundary counts

}  // namespace mdisc
