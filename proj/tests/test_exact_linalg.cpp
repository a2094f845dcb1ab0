#include "mdisc/exact_linalg.hpp"

#include <doctest.h>

#include <random>

using namespace mdisc;

namespace {

MatXi from_rows(const std::vector<std::vector<long>>& rows) {
  MatXi m(static_cast<Index>(rows.size()), static_cast<Index>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Index>(i), static_cast<Index>(j)) = Int(rows[i][j]);
  return m;
}

MatXi random_matrix(std::mt19937_64& gen, Index rows, Index cols, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  MatXi m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = Int(dist(gen));
  return m;
}

}  // namespace

TEST_CASE("determinant basics") {
  CHECK(det(MatXi::Identity(4, 4)) == 1);
  CHECK(det(from_rows({{1, 2}, {3, 4}})) == -2);
  CHECK(det(from_rows({{2, 0, 1}, {1, 1, 1}, {4, 2, 3}})) == 0);
  CHECK(det(from_rows({{3, -1, 2}, {0, 5, 1}, {-2, 4, 7}})) == 115);
  CHECK(det(MatXi(0, 0)) == 1);
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
  std::mt19937_64 gen(1);
  for (int rep = 0; rep < 20; ++rep) {
    MatXi m = random_matrix(gen, 4, 4, -6, 6);
    MatXi adj = adjugate(m);
    Int d = det(m);
    MatXi prod = m * adj;
    for (Index i = 0; i < 4; ++i)
      for (Index j = 0; j < 4; ++j) CHECK(prod(i, j) == (i == j ? d : Int(0)));
  }
}

TEST_CASE("rank") {
  CHECK(rank_of(MatXi::Zero(3, 3)) == 0);
  CHECK(rank_of(from_rows({{1, 2, 3}, {2, 4, 6}})) == 1);
  CHECK(rank_of(from_rows({{1, 1, 1, 0, 0, 0},
                           {0, 0, 0, 1, 1, 1},
                           {0, 1, 2, 0, 0, 0},
                           {0, 0, 0, 0, 1, 2}})) == 4);
}

TEST_CASE("kernel basis small cases") {
  CHECK(kernel_basis(MatXi::Identity(2, 2)).rows() == 0);

  MatXi ones = from_rows({{1, 1}});
  MatXi k = kernel_basis(ones);
  REQUIRE(k.rows() == 1);
  CHECK(k(0, 0) == 1);
  CHECK(k(0, 1) == -1);

  MatXi a = from_rows({{1, 1, 1}, {0, 1, 2}});
  MatXi kb = kernel_basis(a);
  REQUIRE(kb.rows() == 1);
  CHECK(kb(0, 0) == 1);
  CHECK(kb(0, 1) == -2);
  CHECK(kb(0, 2) == 1);
}

TEST_CASE("kernel basis is orthogonal and primitive") {
  std::mt19937_64 gen(7);
  for (int rep = 0; rep < 30; ++rep) {
    MatXi m = random_matrix(gen, 2, 5, -4, 4);
    MatXi k = kernel_basis(m);
    CHECK(k.rows() == 5 - rank_of(m));
    MatXi prod = m * k.transpose();
    for (Index i = 0; i < prod.rows(); ++i)
      for (Index j = 0; j < prod.cols(); ++j) CHECK(prod(i, j) == 0);
    if (k.rows() > 0 && rank_of(m) == m.rows()) {
      // minors of a primitive kernel basis are coprime
      CHECK(gcd_maximal_minors(k) == 1);
      // Gale duality constant: |det([m; k])| * gcd-of-minors(m) = det(m m^T)
      MatXi stacked(m.rows() + k.rows(), 5);
      stacked.topRows(m.rows()) = m;
      stacked.bottomRows(k.rows()) = k;
      MatXi gram = m * m.transpose();
      CHECK(abs(det(stacked)) * gcd_maximal_minors(m) == det(gram));
    }
  }
}

TEST_CASE("gcd of maximal minors") {
  MatXi ext = from_rows({{1, 0, 3}, {0, 1, 7}});
  CHECK(gcd_maximal_minors(ext) == 1);

  // scaled-simplex pair with opposite orientation and d1 = d2 = 2
  MatXi cay_neg = from_rows({{1, 1, 1, 0, 0, 0},
                             {0, 0, 0, 1, 1, 1},
                             {0, 2, 0, 0, -2, 0},
                             {0, 0, 2, 0, 0, -2}});
  CHECK(gcd_maximal_minors(cay_neg) == 4);

  MatXi cay_24 = from_rows({{1, 1, 1, 0, 0, 0},
                            {0, 0, 0, 1, 1, 1},
                            {0, 2, 0, 0, 4, 0},
                            {0, 0, 2, 0, 0, 4}});
  CHECK(gcd_maximal_minors(cay_24) == 4);

  CHECK_THROWS_AS(gcd_maximal_minors(from_rows({{1, 2}, {2, 4}})), InputError);
}

TEST_CASE("elementary divisors agree with minor gcds") {
  std::mt19937_64 gen(11);
  for (int rep = 0; rep < 20; ++rep) {
    MatXi m = random_matrix(gen, 3, 5, -3, 3);
    if (rank_of(m) != 3) continue;
    std::vector<Int> divs = elementary_divisors(m);
    Int prod(1);
    for (const Int& d : divs) prod *= d;
    CHECK(prod == gcd_maximal_minors(m));
  }
}

TEST_CASE("exact solve") {
  MatXi a = from_rows({{2, 1}, {1, 3}});
  VecXi b(2);
  b << Int(5), Int(10);
  VecXi num;
  Int den;
  REQUIRE(solve_exact(a, b, num, den));
  CHECK(num(0) * 3 == den * 3);  // x = 1
  CHECK(Rat(num(0), den) == Rat(1));
  CHECK(Rat(num(1), den) == Rat(3));
  MatXi sing = from_rows({{1, 2}, {2, 4}});
  CHECK_FALSE(solve_exact(sing, b, num, den));
}

TEST_CASE("row space basis") {
  MatXi rows = from_rows({{2, 4, 6}, {1, 2, 3}, {0, 0, 5}});
  MatXi basis = row_space_basis(rows);
  REQUIRE(basis.rows() == 2);
  CHECK(basis(0, 0) == 1);
  CHECK(basis(0, 1) == 2);
  CHECK(basis(0, 2) == 0);
  CHECK(basis(1, 0) == 0);
  CHECK(basis(1, 1) == 0);
  CHECK(basis(1, 2) == 1);
}

TEST_CASE("subset enumeration") {
  auto subs = all_subsets(4, 2);
  CHECK(subs.size() == 6);
  CHECK(subs.front() == std::vector<int>{0, 1});
  CHECK(subs.back() == std::vector<int>{2, 3});
}
