#include "mdisc/matroid.hpp"

#include "mdisc/cayley.hpp"
#include "mdisc/corpus.hpp"
#include "mdisc/exact_linalg.hpp"

#include <doctest.h>

#include <set>

using namespace mdisc;

namespace {

MatXi from_rows(const std::vector<std::vector<long>>& rows) {
  MatXi m(static_cast<Index>(rows.size()), static_cast<Index>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Index>(i), static_cast<Index>(j)) = Int(rows[i][j]);
  return m;
}

// alternative kernel basis from rational row reduction of the matrix itself:
// solve for pivot variables in terms of free ones
MatXi kernel_by_rref(const MatXi& a) {
  const Index d = a.rows(), m = a.cols();
  std::vector<std::vector<Rat>> r(static_cast<size_t>(d), std::vector<Rat>(static_cast<size_t>(m)));
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < m; ++j) r[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(a(i, j));
  std::vector<Index> pivot_col;
  Index lead = 0;
  for (Index c = 0; c < m && lead < d; ++c) {
    Index p = -1;
    for (Index i = lead; i < d; ++i)
      if (r[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(r[static_cast<size_t>(p)], r[static_cast<size_t>(lead)]);
    Rat pv = r[static_cast<size_t>(lead)][static_cast<size_t>(c)];
    for (Index j = 0; j < m; ++j) r[static_cast<size_t>(lead)][static_cast<size_t>(j)] /= pv;
    for (Index i = 0; i < d; ++i) {
      if (i == lead) continue;
      Rat f = r[static_cast<size_t>(i)][static_cast<size_t>(c)];
      if (f == 0) continue;
      for (Index j = 0; j < m; ++j)
        r[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * r[static_cast<size_t>(lead)][static_cast<size_t>(j)];
    }
    pivot_col.push_back(c);
    ++lead;
  }
  std::vector<bool> is_pivot(static_cast<size_t>(m), false);
  for (Index c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<Index> free_cols;
  for (Index c = 0; c < m; ++c)
    if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
  MatXi out(static_cast<Index>(free_cols.size()), m);
  out.setZero();
  for (size_t k = 0; k < free_cols.size(); ++k) {
    // x_free = 1, pivots follow; clear denominators
    std::vector<Rat> x(static_cast<size_t>(m), Rat(0));
    x[static_cast<size_t>(free_cols[k])] = 1;
    for (Index i = 0; i < static_cast<Index>(pivot_col.size()); ++i)
      x[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] =
          -r[static_cast<size_t>(i)][static_cast<size_t>(free_cols[k])];
    Int den(1);
    for (const Rat& v : x) den = den / gcd(den, Int(denominator(v))) * Int(denominator(v));
    for (Index j = 0; j < m; ++j)
      out(static_cast<Index>(k), j) = Int(numerator(x[static_cast<size_t>(j)])) *
                                      (den / Int(denominator(x[static_cast<size_t>(j)])));
  }
  return out;
}

}  // namespace

TEST_CASE("gale dual basics") {
  MatXi a = from_rows({{1, 1, 1}, {0, 1, 2}});
  GaleDual g = gale_dual(a);
  REQUIRE(g.corank() == 1);
  CHECK(g.beta(0, 0) == 1);
  CHECK(g.beta(0, 1) == -2);
  CHECK(g.beta(0, 2) == 1);

  CHECK(gale_dual(MatXi::Identity(3, 3)).corank() == 0);
  CHECK_THROWS_AS(gale_dual(from_rows({{1, 2}, {2, 4}})), InputError);

  auto sys = build_cayley({sparse_triangle_config(2, "A1"), sparse_triangle_config(3, "A2")});
  GaleDual gd = gale_dual(sys.matrix);
  CHECK(gd.corank() == 2);
  MatXi prod = sys.matrix * gd.beta.transpose();
  for (Index i = 0; i < prod.rows(); ++i)
    for (Index j = 0; j < prod.cols(); ++j) CHECK(prod(i, j) == 0);
}

TEST_CASE("rank-one flats of the scaled-simplex pair") {
  auto sys = build_cayley({sparse_triangle_config(2, "A1"), sparse_triangle_config(3, "A2")});
  DualMatroid m(gale_dual(sys.matrix));
  CHECK(m.rank() == 2);
  auto flats = m.flats_of_rank(1);
  // pairs {1,4}, {2,5}, {3,6} in 1-based labels
  std::vector<std::uint32_t> expected = {0b001001, 0b010010, 0b100100};
  CHECK(flats == expected);
  // each maximal chain is a single rank-1 flat
  REQUIRE(m.maximal_chains().size() == 3);
  for (size_t i = 0; i < 3; ++i) CHECK(m.maximal_chains()[i] == FlagChain{expected[i]});
}

TEST_CASE("rank-zero flat collects the loops") {
  MatXi a = from_rows({{1, 1, 0}, {0, 0, 1}});
  DualMatroid m(gale_dual(a));
  auto loops = m.flats_of_rank(0);
  REQUIRE(loops.size() == 1);
  CHECK(loops[0] == 0b100);  // third column never appears in a kernel vector
}

TEST_CASE("uniform dual matroid has the expected flag count") {
  MatXi a = from_rows({{1, 1, 1, 1, 1, 1}, {0, 1, 2, 3, 4, 5}});
  DualMatroid m(gale_dual(a));
  CHECK(m.rank() == 4);
  // (m-d-1)! * C(m, m-d-1) maximal flags
  CHECK(m.maximal_chains().size() == 6 * 20);
  // generic position: rank-1 flats are singletons
  auto flats = m.flats_of_rank(1);
  CHECK(flats.size() == 6);
  for (std::uint32_t f : flats) CHECK((f & (f - 1)) == 0);
}

TEST_CASE("corank one yields a single empty chain") {
  MatXi a = from_rows({{1, 1, 1}, {0, 1, 2}});
  DualMatroid m(gale_dual(a));
  REQUIRE(m.maximal_chains().size() == 1);
  CHECK(m.maximal_chains()[0].empty());
}

TEST_CASE("closure is idempotent, chains climb one rank at a time") {
  auto sys = build_cayley({unit_square_config("A1"), sparse_triangle_config(2, "A2")});
  DualMatroid m(gale_dual(sys.matrix));
  for (int k = 0; k <= static_cast<int>(m.rank()); ++k)
    for (std::uint32_t f : m.flats_of_rank(k)) {
      CHECK(m.closure(f) == f);
      CHECK(m.rank_of_subset(f) == k);
    }
  for (const auto& chain : m.maximal_chains()) {
    for (size_t i = 0; i < chain.size(); ++i) {
      CHECK(m.rank_of_subset(chain[i]) == static_cast<int>(i) + 1);
      if (i > 0) {
        CHECK((chain[i] & chain[i - 1]) == chain[i - 1]);
        CHECK(chain[i] != chain[i - 1]);
      }
    }
  }
}

TEST_CASE("independence agrees with a second kernel-coordinate oracle") {
  auto sys = build_cayley({sparse_triangle_config(2, "A1"), unit_square_config("A2")});
  DualMatroid m(gale_dual(sys.matrix));
  MatXi alt = kernel_by_rref(sys.matrix);
  REQUIRE(alt.rows() == m.rank());
  const Index cols = sys.m();
  for (std::uint32_t s = 0; s < (1u << cols); ++s) {
    std::vector<int> idx;
    for (Index j = 0; j < cols; ++j)
      if (s & (1u << j)) idx.push_back(static_cast<int>(j));
    if (idx.size() > 4) continue;
    Index alt_rank = idx.empty() ? 0 : rank_of(select_columns(alt, idx));
    CHECK(static_cast<Index>(m.rank_of_subset(s)) == alt_rank);
  }
}

TEST_CASE("flats of rank k match brute-force closure of k-subsets") {
  auto sys = build_cayley({sparse_triangle_config(1, "A1"), sparse_triangle_config(2, "A2")});
  DualMatroid m(gale_dual(sys.matrix));
  for (int k = 1; k < static_cast<int>(m.rank()); ++k) {
    std::set<std::uint32_t> brute;
    auto subs = all_subsets(static_cast<int>(m.ground_size()), k);
    for (const auto& s : subs) {
      std::uint32_t mask = 0;
      for (int j : s) mask |= 1u << j;
      if (m.rank_of_subset(mask) == k) brute.insert(m.closure(mask));
    }
    auto flats = m.flats_of_rank(k);
    CHECK(std::set<std::uint32_t>(flats.begin(), flats.end()) == brute);
  }
}

TEST_CASE("bases of the scaled-simplex pair dual matroid") {
  auto sys = build_cayley({sparse_triangle_config(2, "A1"), sparse_triangle_config(3, "A2")});
  DualMatroid m(gale_dual(sys.matrix));
  auto b = m.bases();
  // all 15 pairs except the three parallel ones
  CHECK(b.size() == 12);
  CHECK(std::is_sorted(b.begin(), b.end()));
}
