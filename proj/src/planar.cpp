#include "mdisc/planar.hpp"

#include "mdisc/cayley.hpp"
#include "mdisc/exact_linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mdisc {

namespace {

LatticePoint primitive(const LatticePoint& v) {
  Int g = gcd(abs(v(0)), abs(v(1)));
  LatticePoint out;
  out << v(0) / g, v(1) / g;
  return out;
}

Int dot(const LatticePoint& a, const LatticePoint& b) {
  return a(0) * b(0) + a(1) * b(1);
}

PointConfig config_without(const PointConfig& c, const LatticePoint& v) {
  Index col = -1;
  for (Index j = 0; j < c.count(); ++j)
    if (c.points(0, j) == v(0) && c.points(1, j) == v(1)) { col = j; break; }
  if (col < 0) throw InputError("mixed_multiplicity: point not in configuration");
  return without_point(c, col);
}

// lattice parameters of the configuration points on an edge, relative to its
// first endpoint and primitive direction
std::vector<Int> edge_positions(const PointConfig& c, const EdgeData& e) {
  LatticePoint dir = primitive(e.b - e.a);
  std::vector<Int> out;
  for (Index j : e.on_edge) {
    LatticePoint p;
    p << c.points(0, j), c.points(1, j);
    LatticePoint off = p - e.a;
    out.push_back(dir(0) != 0 ? off(0) / dir(0) : off(1) / dir(1));
  }
  return out;
}

Int sum_mixed_multiplicities(const PointConfig& ai, const PointConfig& aother) {
  Int total(0);
  for (const auto& v : hull_of(ai).verts) total += mixed_multiplicity(v, ai, aother);
  return total;
}

// u(v, A_i) = area(Q_i) - area(conv(A_i minus v)) for a hull vertex v
Int vertex_subdiagram_height(const PointConfig& c, const LatticePoint& v) {
  return normalized_area(hull_of(c)) - normalized_area(hull_of(config_without(c, v)));
}

// total degree of the discriminant cycle of a single plane curve:
// 3 area(Q_i) - sum_e u(e) deg(edge cycle) - sum_v u(v)
Int horizontal_cycle_degree(const PointConfig& c) {
  Int deg = 3 * normalized_area(hull_of(c));
  for (const auto& e : edge_data(c))
    deg -= e.height * univariate_cycle_degree(edge_positions(c, e));
  for (const auto& v : hull_of(c).verts) deg -= vertex_subdiagram_height(c, v);
  return deg;
}

bool same_normal_fan(const PointConfig& a1, const PointConfig& a2) {
  auto normals = [](const PointConfig& c) {
    std::set<std::pair<Int, Int>> out;
    for (const auto& e : edge_data(c)) out.insert({e.inner_normal(0), e.inner_normal(1)});
    return out;
  };
  return normals(a1) == normals(a2);
}

}  // namespace

std::vector<EdgeData> edge_data(const PointConfig& a) {
  if (a.dim != 2) throw InputError("edge_data: 2-d only");
  Polygon hull = hull_of(a);
  if (!hull.full_dimensional()) throw InputError("not full-dimensional");
  std::vector<EdgeData> out;
  const auto pts = planar_points(a);
  for (size_t i = 0; i < hull.verts.size(); ++i) {
    EdgeData e;
    e.a = hull.verts[i];
    e.b = hull.verts[(i + 1) % hull.verts.size()];
    LatticePoint dir = e.b - e.a;
    e.length = gcd(abs(dir(0)), abs(dir(1)));
    LatticePoint normal;
    normal << -dir(1), dir(0);  // ccw polygon: rotating the edge ccw points inward
    e.inner_normal = primitive(normal);
    Int base = dot(e.inner_normal, e.a);
    Int height(0);
    bool seen = false;
    for (Index j = 0; j < a.count(); ++j) {
      LatticePoint p;
      p << a.points(0, j), a.points(1, j);
      Int h = dot(e.inner_normal, p) - base;
      if (h == 0) {
        e.on_edge.push_back(j);
      } else if (!seen || h < height) {
        height = h;
        seen = true;
      }
    }
    e.height = height;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ParallelPair> strongly_parallel_pairs(const PointConfig& a1,
                                                  const PointConfig& a2) {
  std::vector<ParallelPair> out;
  for (const auto& e : edge_data(a1))
    for (const auto& f : edge_data(a2))
      if (points_equal(e.inner_normal, f.inner_normal)) out.push_back({e, f});
  return out;
}

Int mixed_multiplicity(const LatticePoint& v, const PointConfig& ai,
                       const PointConfig& aother) {
  Polygon qi = hull_of(ai);
  Polygon qo = hull_of(aother);
  Polygon reduced = hull_of(config_without(ai, v));
  return mixed_volume2(qi, qo) - mixed_volume2(reduced, qo);
}

Bidegree planar_bidegree(const PointConfig& a1, const PointConfig& a2) {
  if (!full_dimensional(a1) || !full_dimensional(a2))
    throw InputError("not full-dimensional; use one_dim_degree for segment supports");
  Polygon q1 = hull_of(a1), q2 = hull_of(a2);
  Int area1 = normalized_area(q1), area2 = normalized_area(q2);
  Int mv = mixed_volume2(q1, q2);

  Int parallel1(0), parallel2(0);
  for (const auto& pr : strongly_parallel_pairs(a1, a2)) {
    Int u = std::min(pr.edge1.height, pr.edge2.height);
    parallel1 += u * pr.edge2.length;
    parallel2 += u * pr.edge1.length;
  }
  Int mm1 = sum_mixed_multiplicities(a1, a2);
  Int mm2 = sum_mixed_multiplicities(a2, a1);

  Bidegree out;
  out.cycle[0] = area2 + 2 * mv - parallel1 - mm1;
  out.cycle[1] = area1 + 2 * mv - parallel2 - mm2;

  // double-entry bookkeeping: the factorization route must agree exactly
  auto other = bidegree_via_factorization(a1, a2);
  if (other != out.cycle)
    throw std::logic_error("planar_bidegree: factorization route disagrees");

  out.lattice_index = build_cayley({a1, a2}).lattice_index;
  for (int k = 0; k < 2; ++k) {
    if (out.cycle[k] < 0 || out.cycle[k] % out.lattice_index != 0)
      throw std::logic_error("planar_bidegree: cycle degree not divisible by i(A)");
    out.reduced[k] = out.cycle[k] / out.lattice_index;
  }
  out.defective = out.cycle[0] == 0 && out.cycle[1] == 0;
  return out;
}

std::pair<Int, Int> principal_bidegree(const PointConfig& a1, const PointConfig& a2) {
  if (!full_dimensional(a1) || !full_dimensional(a2))
    throw InputError("principal_bidegree: not full-dimensional");
  Polygon q1 = hull_of(a1), q2 = hull_of(a2);
  Int area1 = normalized_area(q1), area2 = normalized_area(q2);
  Int mv2 = 2 * mixed_volume2(q1, q2);
  return {3 * area1 + area2 + mv2, area1 + 3 * area2 + mv2};
}

std::array<Int, 2> bidegree_via_factorization(const PointConfig& a1,
                                              const PointConfig& a2) {
  auto principal = principal_bidegree(a1, a2);
  std::array<Int, 2> deg{principal.first, principal.second};

  const PointConfig* configs[2] = {&a1, &a2};
  for (int k = 0; k < 2; ++k) {
    const PointConfig& c = *configs[k];
    const PointConfig& other = *configs[1 - k];
    Int correction = horizontal_cycle_degree(c);
    for (const auto& e : edge_data(c))
      correction += e.height * univariate_cycle_degree(edge_positions(c, e));
    for (const auto& v : hull_of(c).verts)
      correction += vertex_subdiagram_height(c, v) + mixed_multiplicity(v, c, other);
    deg[k] -= correction;
  }
  // vertical facets: only the trapezoids over strongly parallel pairs count
  for (const auto& pr : strongly_parallel_pairs(a1, a2)) {
    Int u = std::min(pr.edge1.height, pr.edge2.height);
    deg[0] -= u * pr.edge2.length;
    deg[1] -= u * pr.edge1.length;
  }
  return deg;
}

BidegreeBound bidegree_upper_bound(const PointConfig& a1, const PointConfig& a2) {
  if (!full_dimensional(a1) || !full_dimensional(a2))
    throw InputError("bidegree_upper_bound: not full-dimensional");
  Polygon q1 = hull_of(a1), q2 = hull_of(a2);
  Int mv2 = 2 * mixed_volume2(q1, q2);
  BidegreeBound out;
  out.bound[0] = normalized_area(q2) + mv2 - boundary_lattice_points(q2);
  out.bound[1] = normalized_area(q1) + mv2 - boundary_lattice_points(q1);
  out.smooth_condition = affine_lattice_index(a1) == 1 && affine_lattice_index(a2) == 1 &&
                         smooth_toric_surface(a1) && smooth_toric_surface(a2) &&
                         smooth_toric_surface(pointwise_sum(a1, a2));
  out.fan_dense_condition = same_normal_fan(a1, a2) && (is_dense(a1) || is_dense(a2));
  return out;
}

OneDimReport one_dim_degree(const PointConfig& a1, const PointConfig& a2) {
  if (!full_dimensional(a1)) throw InputError("one_dim_degree: first configuration must be full-dimensional");
  if (affine_dim(a2) != 1) throw InputError("one_dim_degree: second configuration must span a segment");
  Polygon q2 = hull_of(a2);
  LatticePoint dir = primitive(q2.verts[1] - q2.verts[0]);

  OneDimReport out;
  out.delta2 = normalized_area(hull_of(a1));
  int parallel_edges = 0;
  for (const auto& e : edge_data(a1)) {
    if (cross(e.b - e.a, dir) != 0) continue;
    ++parallel_edges;
    out.delta2 -= e.height * e.length;
  }
  if (parallel_edges == 0) {
    out.tag = "no-parallel-edge";
    out.defective = false;
  } else if (out.delta2 == 0) {
    out.defective = true;
    out.tag = parallel_edges == 1 ? "pyramid" : "two-parallel-edges";
  } else {
    out.tag = "positive-degree";
    out.defective = false;
  }
  return out;
}

DefectivenessReport planar_defective(const PointConfig& a1, const PointConfig& a2) {
  if (!full_dimensional(a1) || !full_dimensional(a2))
    throw InputError("planar_defective: not full-dimensional");
  if (a1.count() != 3) return {false, "config-1-has-extra-points"};
  if (a2.count() != 3) return {false, "config-2-has-extra-points"};
  Polygon q1 = hull_of(a1), q2 = hull_of(a2);
  // canonical start vertices correspond, so translates match pointwise
  for (size_t i = 0; i < 3; ++i) {
    LatticePoint d1 = q1.verts[i] - q1.verts[0];
    LatticePoint d2 = q2.verts[i] - q2.verts[0];
    if (!points_equal(d1, d2)) return {false, "hulls-not-translates"};
  }
  return {true, "translated-triangles"};
}

Int univariate_cycle_degree(std::vector<Int> positions) {
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  const size_t k = positions.size();
  if (k <= 2) return Int(0);  // points and binomials are defective
  return 2 * (positions[k - 1] - positions[0]) - (positions[1] - positions[0]) -
         (positions[k - 1] - positions[k - 2]);
}

bool smooth_toric_surface(const PointConfig& a) {
  Polygon hull = hull_of(a);
  if (!hull.full_dimensional()) throw InputError("smooth_toric_surface: not full-dimensional");
  const size_t n = hull.verts.size();
  for (size_t i = 0; i < n; ++i) {
    const LatticePoint& v = hull.verts[i];
    LatticePoint to_next = primitive(hull.verts[(i + 1) % n] - v);
    LatticePoint to_prev = primitive(hull.verts[(i + n - 1) % n] - v);
    if (abs(cross(to_next, to_prev)) != 1) return false;
    VecXi p1(2), p2(2);
    p1 << v(0) + to_next(0), v(1) + to_next(1);
    p2 << v(0) + to_prev(0), v(1) + to_prev(1);
    if (!contains_point(a, p1) || !contains_point(a, p2)) return false;
  }
  return true;
}

PointConfig pointwise_sum(const PointConfig& a1, const PointConfig& a2) {
  if (a1.dim != 2 || a2.dim != 2) throw InputError("pointwise_sum: 2-d only");
  std::set<std::pair<Int, Int>> seen;
  std::vector<std::pair<Int, Int>> sums;
  for (Index i = 0; i < a1.count(); ++i)
    for (Index j = 0; j < a2.count(); ++j) {
      std::pair<Int, Int> s{a1.points(0, i) + a2.points(0, j),
                            a1.points(1, i) + a2.points(1, j)};
      if (seen.insert(s).second) sums.push_back(s);
    }
  PointConfig out;
  out.dim = 2;
  out.label = a1.label + "+" + a2.label;
  out.points.resize(2, static_cast<Index>(sums.size()));
  for (size_t j = 0; j < sums.size(); ++j) {
    out.points(0, static_cast<Index>(j)) = sums[j].first;
    out.points(1, static_cast<Index>(j)) = sums[j].second;
  }
  return out;
}

}  // namespace mdisc
