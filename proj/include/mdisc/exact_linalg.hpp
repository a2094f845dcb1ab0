#pragma once

// Fraction-free integer linear algebra: determinants, rank, primitive kernel
// lattice bases, gcd of maximal minors, elementary divisors, exact solves.

#include "mdisc/numeric.hpp"

#include <vector>

namespace mdisc {

// Bareiss fraction-free determinant of a square matrix.
Int det(const MatXi& m);

// Exact rank over Q.
Index rank_of(const MatXi& m);

// Rows form a primitive lattice basis of ker(m) ∩ Z^cols (the saturated
// integer kernel). Deterministic: column elimination always reduces against
// the entry of smallest absolute value (ties broken by column index), so the
// result is a pure function of the input matrix. A full-column-rank input
// yields a 0 x cols result.
MatXi kernel_basis(const MatXi& m);

// gcd of the absolute values of all rows x rows minors. Requires full row
// rank (throws InputError("rank deficient") otherwise). Enumerates column
// subsets directly up to 24 columns; falls back to the product of elementary
// divisors beyond that.
Int gcd_maximal_minors(const MatXi& m);

// Diagonal of the Smith normal form, zero entries trimmed. d1 | d2 | ... and
// d1*...*dk equals the gcd of all k x k minors.
std::vector<Int> elementary_divisors(MatXi m);

MatXi select_columns(const MatXi& m, const std::vector<int>& cols);

// k-subsets of {0,...,n-1} in lexicographic order
std::vector<int> first_subset(int k);
bool next_subset(std::vector<int>& s, int n);
std::vector<std::vector<int>> all_subsets(int n, int k);

// Solves a*x = b for square a; x returned as num/den with a single common
// denominator den = det-like pivot product. Returns false when singular.
bool solve_exact(const MatXi& a, const VecXi& b, VecXi& num, Int& den);

// Dense rational Gaussian elimination, a is square. Returns false if singular.
bool gauss_solve(std::vector<std::vector<Rat>> a, std::vector<Rat> b,
                 std::vector<Rat>& x);

// Integer basis of the row space of `rows` over Q, in reduced row echelon
// shape with each basis row primitive. Deterministic.
MatXi row_space_basis(const MatXi& rows);

// Classical adjugate, adj(a) with a*adj(a) = det(a)*I; exact.
MatXi adjugate(const MatXi& a);

}  // namespace mdisc
