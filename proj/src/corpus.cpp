#include "mdisc/corpus.hpp"

#include <algorithm>

namespace mdisc {

PointConfig unit_square_config(const std::string& label) {
  return make_config(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}, label);
}

PointConfig sparse_triangle_config(long d, const std::string& label) {
  return make_config(2, {{0, 0}, {d, 0}, {0, d}}, label);
}

PointConfig dense_triangle_config(long d, const std::string& label) {
  std::vector<std::vector<long>> pts;
  long a = std::abs(d), s = d < 0 ? -1 : 1;
  for (long x = 0; x <= a; ++x)
    for (long y = 0; x + y <= a; ++y) pts.push_back({s * x, s * y});
  return make_config(2, pts, label);
}

std::vector<PointConfig> trinomial_configs(long p, long q, long r) {
  return {make_config(3, {{1, 0, 0}, {0, p, 0}, {0, 0, p}}, "f"),
          make_config(3, {{q, 0, 0}, {0, 1, 0}, {0, 0, q}}, "g"),
          make_config(3, {{r, 0, 0}, {0, r, 0}, {0, 0, 1}}, "h")};
}

std::vector<PointConfig> pure_power_configs(const std::vector<long>& ds) {
  const long n = static_cast<long>(ds.size());
  std::vector<PointConfig> out;
  for (long i = 0; i < n; ++i) {
    std::vector<std::vector<long>> pts;
    pts.push_back(std::vector<long>(static_cast<size_t>(n), 0));
    for (long j = 0; j < n; ++j) {
      std::vector<long> e(static_cast<size_t>(n), 0);
      e[static_cast<size_t>(j)] = ds[static_cast<size_t>(i)];
      pts.push_back(e);
    }
    out.push_back(make_config(n, pts, "f" + std::to_string(i + 1)));
  }
  return out;
}

namespace {

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> c;

  c.push_back({"univariate-quadric-pair",
               "two univariate quadrics in separate variables; no common "
               "multiple root can exist",
               {make_config(2, {{0, 0}, {1, 0}, {2, 0}}, "A1"),
                make_config(2, {{0, 0}, {0, 1}, {0, 2}}, "A2")},
               {Int(0), Int(0)},
               Int(1),
               true});

  c.push_back({"hyperdet-2x2x2",
               "hyperdeterminant of format 2x2x2; bidegree (2,2)",
               {unit_square_config("A1"), unit_square_config("A2")},
               {Int(2), Int(2)},
               Int(1),
               false});

  c.push_back({"tact-2-2",
               "tact invariant of two dense conics: (d2^2+2d1d2-3d2, d1^2+2d1d2-3d1)",
               {dense_triangle_config(2, "A1"), dense_triangle_config(2, "A2")},
               {Int(6), Int(6)},
               Int(1),
               false});

  c.push_back({"tact-2-3",
               "tact invariant, dense degrees 2 and 3",
               {dense_triangle_config(2, "A1"), dense_triangle_config(3, "A2")},
               {Int(12), Int(10)},
               Int(1),
               false});

  c.push_back({"sparse-coprime-2-3",
               "three-term curves x^d+y^d+1, coprime degrees: tact formula with "
               "3*min{d1,d2} in place of 3",
               {sparse_triangle_config(2, "A1"), sparse_triangle_config(3, "A2")},
               {Int(3), Int(4)},
               Int(1),
               false});

  c.push_back({"dense-opposite-1-1",
               "dense triangles with opposite orientation, degree "
               "(d2^2+4d1d2-3d2, d1^2+4d1d2-3d1)",
               {dense_triangle_config(1, "A1"), dense_triangle_config(-1, "A2")},
               {Int(2), Int(2)},
               Int(1),
               false});

  c.push_back({"sparse-opposite-2-2",
               "sparse opposite triangles, cycle degree (d2^2+d1d2, d1^2+d1d2), "
               "lattice index gcd(d1,d2)^2",
               {sparse_triangle_config(2, "A1"), sparse_triangle_config(-2, "A2")},
               {Int(8), Int(8)},
               Int(4),
               false});

  c.push_back({"square-triangle-full",
               "unit square against a spiky triangle with two interior points; "
               "hand-checked edge and vertex corrections",
               {unit_square_config("A1"),
                make_config(2, {{0, 0}, {1, 3}, {-1, 2}, {0, 1}, {0, 2}}, "A2")},
               {Int(12), Int(8)},
               Int(1),
               false});

  c.push_back({"square-triangle-reduced",
               "same hulls with one interior point removed; the degree drops",
               {unit_square_config("A1"),
                make_config(2, {{0, 0}, {1, 3}, {-1, 2}, {0, 2}}, "A2")},
               {Int(12), Int(7)},
               Int(1),
               false});

  c.push_back({"strata-pos-3-2",
               "scaled-simplex pair, both positive: one stratum of the mixed "
               "Grassmannian",
               {sparse_triangle_config(3, "A1"), sparse_triangle_config(2, "A2")},
               {Int(4), Int(3)},
               Int(1),
               false});

  c.push_back({"strata-pos-5-2",
               "scaled-simplex pair, both positive",
               {sparse_triangle_config(5, "A1"), sparse_triangle_config(2, "A2")},
               {Int(12), Int(15)},
               Int(1),
               false});

  c.push_back({"strata-pos-5-3",
               "scaled-simplex pair, both positive",
               {sparse_triangle_config(5, "A1"), sparse_triangle_config(3, "A2")},
               {Int(12), Int(10)},
               Int(1),
               false});

  c.push_back({"strata-neg-3-2",
               "scaled-simplex pair with opposite orientations: a different "
               "stratum; cycle degree (d2^2+d1d2, d1^2+d1d2)",
               {sparse_triangle_config(3, "A1"), sparse_triangle_config(-2, "A2")},
               {Int(10), Int(15)},
               Int(1),
               false});

  c.push_back({"strata-neg-5-2",
               "scaled-simplex pair with opposite orientations",
               {sparse_triangle_config(5, "A1"), sparse_triangle_config(-2, "A2")},
               {Int(14), Int(35)},
               Int(1),
               false});

  c.push_back({"trinomial-2-2-2",
               "three trinomials in three variables; piecewise formula "
               "2pqr+q^2r+qr^2-q-r-1-p*min{q,r} and its symmetries",
               trinomial_configs(2, 2, 2),
               {Int(23), Int(23), Int(23)},
               Int(1),
               false});

  c.push_back({"trinomial-2-3-4",
               "three trinomials in three variables, instance (2,3,4)",
               trinomial_configs(2, 3, 4),
               {Int(118), Int(83), Int(64)},
               Int(1),
               false});

  c.push_back({"pure-powers-1-2-3",
               "c0 + c1 x^di + c2 y^di + c3 z^di family; degree "
               "prod_{j!=i} dj * (di - n d1 + d2 + ... + dn)",
               pure_power_configs({1, 2, 3}),
               {Int(18), Int(12), Int(10)},
               Int(1),
               false});

  return c;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build_corpus();
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  throw InputError("unknown example: " + name);
}

}  // namespace mdisc
