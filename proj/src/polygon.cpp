#include "mdisc/polygon.hpp"

#include <algorithm>

namespace mdisc {

Polygon convex_hull(std::vector<LatticePoint> pts) {
  if (pts.empty()) throw InputError("convex_hull: empty point set");
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end(), points_equal), pts.end());
  const size_t n = pts.size();
  if (n <= 2) return Polygon{pts};
  // Andrew's monotone chain, strict turns only
  std::vector<LatticePoint> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {  // lower hull
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper hull
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() == 2 && lex_less(hull[1], hull[0])) std::swap(hull[0], hull[1]);
  return Polygon{hull};
}

Int normalized_area(const Polygon& p) {
  if (p.size() < 3) return Int(0);
  Int twice(0);
  const auto& v = p.verts;
  for (size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    twice += a(0) * b(1) - b(0) * a(1);
  }
  if (twice < 0) throw InputError("normalized_area: polygon not ccw");
  return twice;
}

Int lattice_length(const LatticePoint& a, const LatticePoint& b) {
  return gcd(abs(b(0) - a(0)), abs(b(1) - a(1)));
}

Int boundary_lattice_points(const Polygon& p) {
  if (p.is_point()) return Int(1);
  if (p.is_segment()) return lattice_length(p.verts[0], p.verts[1]) + 1;
  Int total(0);
  const auto& v = p.verts;
  for (size_t i = 0; i < v.size(); ++i)
    total += lattice_length(v[i], v[(i + 1) % v.size()]);
  return total;
}

Polygon minkowski_sum(const Polygon& a, const Polygon& b) {
  std::vector<LatticePoint> sums;
  sums.reserve(a.verts.size() * b.verts.size());
  for (const auto& p : a.verts)
    for (const auto& q : b.verts) sums.push_back(p + q);
  return convex_hull(std::move(sums));
}

Int mixed_volume2(const Polygon& a, const Polygon& b) {
  Int twice = normalized_area(minkowski_sum(a, b)) - normalized_area(a) - normalized_area(b);
  if (twice < 0 || twice % 2 != 0)
    throw InputError("mixed_volume2: internal area bookkeeping error");
  return twice / 2;
}

Polygon translate(const Polygon& p, const LatticePoint& t) {
  Polygon out = p;
  for (auto& v : out.verts) v += t;
  return out;
}

bool polygon_equal(const Polygon& a, const Polygon& b) {
  if (a.verts.size() != b.verts.size()) return false;
  for (size_t i = 0; i < a.verts.size(); ++i)
    if (!points_equal(a.verts[i], b.verts[i])) return false;
  return true;
}

bool point_in_polygon(const Polygon& p, const LatticePoint& q) {
  if (p.is_point()) return points_equal(p.verts[0], q);
  if (p.is_segment()) {
    const auto& a = p.verts[0];
    const auto& b = p.verts[1];
    if (cross(a, b, q) != 0) return false;
    return (q(0) - a(0)) * (q(0) - b(0)) + (q(1) - a(1)) * (q(1) - b(1)) <= 0;
  }
  const auto& v = p.verts;
  for (size_t i = 0; i < v.size(); ++i)
    if (cross(v[i], v[(i + 1) % v.size()], q) < 0) return false;
  return true;
}

}  // namespace mdisc
