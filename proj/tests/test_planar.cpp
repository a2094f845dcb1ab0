#include "mdisc/planar.hpp"

#include "mdisc/corpus.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace mdisc;

namespace {

bool cycle_is(const Bidegree& b, long d1, long d2) {
  return b.cycle[0] == d1 && b.cycle[1] == d2;
}

std::vector<std::pair<Int, Int>> length_height_pairs(const PointConfig& c) {
  std::vector<std::pair<Int, Int>> out;
  for (const auto& e : edge_data(c)) out.emplace_back(e.length, e.height);
  std::sort(out.begin(), out.end());
  return out;
}

const PointConfig kSquare = unit_square_config("A1");
const PointConfig kSpiky =
    make_config(2, {{0, 0}, {1, 3}, {-1, 2}, {0, 1}, {0, 2}}, "A2");
const PointConfig kSpikyReduced =
    make_config(2, {{0, 0}, {1, 3}, {-1, 2}, {0, 2}}, "A2");

}  // namespace

TEST_CASE("edge data for dense and sparse supports") {
  auto square_edges = edge_data(kSquare);
  REQUIRE(square_edges.size() == 4);
  for (const auto& e : square_edges) {
    CHECK(e.length == 1);
    CHECK(e.height == 1);
  }

  auto sparse = edge_data(sparse_triangle_config(2, "A"));
  REQUIRE(sparse.size() == 3);
  for (const auto& e : sparse) {
    CHECK(e.length == 2);
    CHECK(e.height == 2);
  }

  CHECK(length_height_pairs(kSpiky) ==
        std::vector<std::pair<Int, Int>>{{Int(1), Int(1)}, {Int(1), Int(1)}, {Int(1), Int(1)}});
  CHECK(length_height_pairs(kSpikyReduced) ==
        std::vector<std::pair<Int, Int>>{{Int(1), Int(1)}, {Int(1), Int(2)}, {Int(1), Int(2)}});

  CHECK_THROWS_WITH_AS(edge_data(make_config(2, {{0, 0}, {1, 1}}, "A")),
                       "not full-dimensional", InputError);
}

TEST_CASE("inner normals are minimized exactly on their edges") {
  for (const auto* c : {&kSpiky, &kSquare}) {
    for (const auto& e : edge_data(*c)) {
      Int base = e.inner_normal(0) * e.a(0) + e.inner_normal(1) * e.a(1);
      for (Index j = 0; j < c->count(); ++j) {
        Int h = e.inner_normal(0) * c->points(0, j) + e.inner_normal(1) * c->points(1, j) - base;
        CHECK(h >= 0);
        bool on = std::find(e.on_edge.begin(), e.on_edge.end(), j) != e.on_edge.end();
        CHECK((h == 0) == on);
      }
    }
  }
}

TEST_CASE("strongly parallel pairs") {
  CHECK(strongly_parallel_pairs(kSquare, unit_square_config("A2")).size() == 4);
  CHECK(strongly_parallel_pairs(dense_triangle_config(1, "A1"),
                                dense_triangle_config(-1, "A2"))
            .empty());
  CHECK(strongly_parallel_pairs(sparse_triangle_config(1, "A1"),
                                sparse_triangle_config(2, "A2"))
            .size() == 3);
}

TEST_CASE("mixed multiplicities") {
  // dense opposite triangles: every vertex of A1 has multiplicity d2
  auto a1 = dense_triangle_config(2, "A1");
  auto a2 = dense_triangle_config(-3, "A2");
  for (const auto& v : hull_of(a1).verts) CHECK(mixed_multiplicity(v, a1, a2) == 3);
  for (const auto& v : hull_of(a2).verts) CHECK(mixed_multiplicity(v, a2, a1) == 2);

  CHECK(mixed_multiplicity(lattice_point(0, 0), kSpiky, kSquare) == 1);
  CHECK(mixed_multiplicity(lattice_point(0, 0), kSpikyReduced, kSquare) == 2);
  // interior points contribute nothing
  CHECK(mixed_multiplicity(lattice_point(0, 1), kSpiky, kSquare) == 0);
}

TEST_CASE("bidegree of the hyperdeterminant pair") {
  Bidegree b = planar_bidegree(kSquare, unit_square_config("A2"));
  CHECK(cycle_is(b, 2, 2));
  CHECK(b.lattice_index == 1);
  CHECK_FALSE(b.defective);
}

TEST_CASE("bidegree of the square against the spiky triangle") {
  CHECK(cycle_is(planar_bidegree(kSquare, kSpiky), 12, 8));
  CHECK(cycle_is(planar_bidegree(kSquare, kSpikyReduced), 12, 7));
}

TEST_CASE("tact invariant for dense curves") {
  auto tact = [](long d1, long d2) {
    return planar_bidegree(dense_triangle_config(d1, "A1"), dense_triangle_config(d2, "A2"));
  };
  CHECK(cycle_is(tact(2, 2), 6, 6));
  CHECK(cycle_is(tact(2, 3), 12, 10));
  CHECK(cycle_is(tact(3, 3), 18, 18));
}

TEST_CASE("sparse coprime pairs follow the reduced tact formula") {
  auto sparse = [](long d1, long d2) {
    return planar_bidegree(sparse_triangle_config(d1, "A1"), sparse_triangle_config(d2, "A2"));
  };
  CHECK(cycle_is(sparse(1, 2), 2, 2));
  CHECK(cycle_is(sparse(2, 3), 3, 4));
  CHECK(cycle_is(sparse(3, 4), 4, 6));
  CHECK(cycle_is(sparse(2, 5), 15, 12));
}

TEST_CASE("opposite-orientation families") {
  Bidegree dense = planar_bidegree(dense_triangle_config(1, "A1"), dense_triangle_config(-1, "A2"));
  CHECK(cycle_is(dense, 2, 2));
  Bidegree dense23 =
      planar_bidegree(dense_triangle_config(2, "A1"), dense_triangle_config(-3, "A2"));
  CHECK(cycle_is(dense23, 24, 22));  // (d2^2+4d1d2-3d2, d1^2+4d1d2-3d1)

  Bidegree sparse22 =
      planar_bidegree(sparse_triangle_config(2, "A1"), sparse_triangle_config(-2, "A2"));
  CHECK(cycle_is(sparse22, 8, 8));
  CHECK(sparse22.lattice_index == 4);
  CHECK(sparse22.reduced[0] == 2);
  CHECK(sparse22.reduced[1] == 2);
}

TEST_CASE("swap symmetry and invariance") {
  std::mt19937_64 gen(21);
  std::uniform_int_distribution<long> coord(-3, 3);
  for (int rep = 0; rep < 25; ++rep) {
    std::vector<std::vector<long>> p1, p2;
    for (int i = 0; i < 4; ++i) {
      p1.push_back({coord(gen), coord(gen)});
      p2.push_back({coord(gen), coord(gen)});
    }
    PointConfig a1, a2;
    try {
      a1 = make_config(2, p1, "A1");
      a2 = make_config(2, p2, "A2");
    } catch (const InputError&) {
      continue;  // duplicate points
    }
    if (!full_dimensional(a1) || !full_dimensional(a2)) continue;

    Bidegree b = planar_bidegree(a1, a2);
    Bidegree swapped = planar_bidegree(a2, a1);
    CHECK(b.cycle[0] == swapped.cycle[1]);
    CHECK(b.cycle[1] == swapped.cycle[0]);

    VecXi t1(2), t2(2);
    t1 << Int(5), Int(-2);
    t2 << Int(-1), Int(7);
    Bidegree moved = planar_bidegree(translated(a1, t1), translated(a2, t2));
    CHECK(moved.cycle == b.cycle);

    MatXi u(2, 2);
    u << Int(1), Int(1), Int(1), Int(2);  // det 1
    Bidegree mapped = planar_bidegree(transformed(a1, u), transformed(a2, u));
    CHECK(mapped.cycle == b.cycle);
    CHECK(mapped.lattice_index == b.lattice_index);
  }
}

TEST_CASE("factorization route agrees by construction") {
  auto direct = planar_bidegree(kSquare, kSpiky);
  auto routed = bidegree_via_factorization(kSquare, kSpiky);
  CHECK(direct.cycle[0] == routed[0]);
  CHECK(direct.cycle[1] == routed[1]);
}

TEST_CASE("principal determinant bidegree") {
  auto squares = principal_bidegree(kSquare, unit_square_config("A2"));
  CHECK(squares.first == 12);
  CHECK(squares.second == 12);
  auto simplices =
      principal_bidegree(sparse_triangle_config(1, "A1"), sparse_triangle_config(1, "A2"));
  CHECK(simplices.first == 6);
  CHECK(simplices.second == 6);
  auto mixed =
      principal_bidegree(sparse_triangle_config(2, "A1"), sparse_triangle_config(-1, "A2"));
  CHECK(mixed.first == 21);
  CHECK(mixed.second == 15);
}

TEST_CASE("upper bound and its equality conditions") {
  auto squares = bidegree_upper_bound(kSquare, unit_square_config("A2"));
  CHECK(squares.bound[0] == 2);
  CHECK(squares.bound[1] == 2);
  CHECK(squares.fan_dense_condition);

  auto spiky = bidegree_upper_bound(kSquare, kSpiky);
  CHECK(spiky.bound[0] == 12);
  CHECK(spiky.bound[1] == 8);
  CHECK_FALSE(spiky.smooth_condition);
  CHECK_FALSE(spiky.fan_dense_condition);

  auto sparse = bidegree_upper_bound(sparse_triangle_config(2, "A1"),
                                     sparse_triangle_config(3, "A2"));
  Bidegree actual =
      planar_bidegree(sparse_triangle_config(2, "A1"), sparse_triangle_config(3, "A2"));
  CHECK(actual.cycle[0] < sparse.bound[0]);
  CHECK(actual.cycle[1] < sparse.bound[1]);
}

TEST_CASE("one-dimensional second support") {
  // two parallel edges covering the whole support: defective
  auto vertical = make_config(2, {{0, 0}, {0, 1}}, "A2");
  OneDimReport square_case = one_dim_degree(kSquare, vertical);
  CHECK(square_case.delta2 == 0);
  CHECK(square_case.defective);
  CHECK(square_case.tag == "two-parallel-edges");

  // no parallel edge
  auto skew = make_config(2, {{0, 0}, {1, 2}}, "A2");
  OneDimReport simplex_case = one_dim_degree(sparse_triangle_config(1, "A1"), skew);
  CHECK(simplex_case.delta2 == 1);
  CHECK_FALSE(simplex_case.defective);
  CHECK(simplex_case.tag == "no-parallel-edge");

  // quadrilateral with all points on the two horizontal edges
  auto quad = make_config(2, {{0, 0}, {1, 0}, {0, 1}, {2, 1}}, "A1");
  auto horizontal = make_config(2, {{0, 0}, {1, 0}}, "A2");
  OneDimReport quad_case = one_dim_degree(quad, horizontal);
  CHECK(quad_case.delta2 == 0);
  CHECK(quad_case.defective);

  CHECK_THROWS_AS(one_dim_degree(kSquare, kSpiky), InputError);
}

TEST_CASE("pyramid case of the one-dimensional formula") {
  // one parallel edge and a single point off it
  auto a1 = make_config(2, {{0, 0}, {2, 0}, {1, 3}}, "A1");
  auto horizontal = make_config(2, {{0, 0}, {1, 0}}, "A2");
  OneDimReport rep = one_dim_degree(a1, horizontal);
  CHECK(rep.delta2 == 0);
  CHECK(rep.defective);
  CHECK(rep.tag == "pyramid");
}

TEST_CASE("defectiveness classification of full-dimensional pairs") {
  auto base = sparse_triangle_config(2, "A1");
  VecXi t(2);
  t << Int(5), Int(7);
  CHECK(planar_defective(base, translated(base, t)).defective);
  CHECK_FALSE(planar_defective(base, sparse_triangle_config(3, "A2")).defective);
  for (long p = 1; p <= 3; ++p)
    CHECK_FALSE(planar_defective(sparse_triangle_config(p, "A1"),
                                 sparse_triangle_config(-p, "A2"))
                    .defective);
  // extra point breaks defectiveness
  auto extra = make_config(2, {{0, 0}, {2, 0}, {0, 2}, {1, 0}}, "A1");
  CHECK_FALSE(planar_defective(extra, translated(extra, t)).defective);
  // defective pairs have cycle degree (0,0)
  Bidegree b = planar_bidegree(base, translated(base, t));
  CHECK(b.defective);
  CHECK(cycle_is(b, 0, 0));
}

TEST_CASE("univariate cycle degrees") {
  auto deg = [](std::vector<long> v) {
    std::vector<Int> pos(v.begin(), v.end());
    return univariate_cycle_degree(pos);
  };
  CHECK(deg({0, 1, 2}) == 2);
  CHECK(deg({0, 1, 2, 3, 4}) == 6);  // dense quartic: 2d - 2
  CHECK(deg({0, 5}) == 0);
  CHECK(deg({3}) == 0);
  CHECK(deg({0, 1, 3}) == 3);
  CHECK(deg({0, 2, 4}) == 4);  // cycle of the quadratic in x^2
}

TEST_CASE("toric surface smoothness") {
  CHECK(smooth_toric_surface(kSquare));
  CHECK(smooth_toric_surface(dense_triangle_config(2, "A")));
  CHECK_FALSE(smooth_toric_surface(sparse_triangle_config(2, "A")));
}
