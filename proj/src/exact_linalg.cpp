#include "mdisc/exact_linalg.hpp"

#include <algorithm>
#include <numeric>

namespace mdisc {

Int det(const MatXi& input) {
  const Index n = input.rows();
  if (n != input.cols()) throw InputError("det: matrix not square");
  if (n == 0) return Int(1);
  MatXi m = input;
  int sign = 1;
  Int prev(1);
  for (Index k = 0; k + 1 < n; ++k) {
    Index pivot = -1;
    for (Index r = k; r < n; ++r)
      if (m(r, k) != 0) { pivot = r; break; }
    if (pivot < 0) return Int(0);
    if (pivot != k) {
      m.row(pivot).swap(m.row(k));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        Int t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = t / prev;  // exact by Bareiss
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

Index rank_of(const MatXi& input) {
  MatXi m = input;
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  Int prev(1);
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = -1;
    for (Index i = r; i < rows; ++i)
      if (m(i, c) != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = c + 1; j < cols; ++j) {
        Int t = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        m(i, j) = t / prev;
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

MatXi kernel_basis(const MatXi& input) {
  const Index d = input.rows(), m = input.cols();
  MatXi a = input;
  MatXi u = MatXi::Identity(m, m);
  Index lead = 0;  // next unconsumed column
  for (Index row = 0; row < d && lead < m; ++row) {
    while (true) {
      Index best = -1;
      for (Index j = lead; j < m; ++j) {
        if (a(row, j) == 0) continue;
        if (best < 0 || abs(a(row, j)) < abs(a(row, best))) best = j;
      }
      if (best < 0) break;  // row is zero past lead
      if (best != lead) {
        a.col(best).swap(a.col(lead));
        u.col(best).swap(u.col(lead));
      }
      bool leftover = false;
      for (Index j = lead + 1; j < m; ++j) {
        if (a(row, j) == 0) continue;
        Int q = a(row, j) / a(row, lead);  // truncated; remainder < pivot
        if (q != 0) {
          a.col(j) -= q * a.col(lead);
          u.col(j) -= q * u.col(lead);
        }
        if (a(row, j) != 0) leftover = true;
      }
      if (!leftover) break;
    }
    if (a(row, lead) != 0) {
      if (a(row, lead) < 0) {
        a.col(lead) = -a.col(lead);
        u.col(lead) = -u.col(lead);
      }
      ++lead;
    }
  }
  // columns lead..m-1 of u span ker(input) ∩ Z^m as a direct summand
  MatXi basis(m - lead, m);
  for (Index k = lead; k < m; ++k) basis.row(k - lead) = u.col(k).transpose();
  for (Index r = 0; r < basis.rows(); ++r)
    for (Index j = 0; j < m; ++j) {
      if (basis(r, j) == 0) continue;
      if (basis(r, j) < 0) basis.row(r) = -basis.row(r);
      break;
    }
  return basis;
}

namespace {

Int gcd_minors_by_enumeration(const MatXi& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  Int g(0);
  std::vector<int> s = first_subset(rows);
  do {
    Int d = det(select_columns(m, s));
    g = gcd(g, d);
    if (g == 1) return g;
  } while (next_subset(s, cols));
  return g;
}

}  // namespace

Int gcd_maximal_minors(const MatXi& m) {
  if (m.rows() > m.cols() || rank_of(m) != m.rows())
    throw InputError("rank deficient");
  if (m.rows() == 0) return Int(1);
  if (m.cols() <= 24) return gcd_minors_by_enumeration(m);
  std::vector<Int> divs = elementary_divisors(m);
  Int p(1);
  for (const Int& d : divs) p *= d;
  return p;
}

std::vector<Int> elementary_divisors(MatXi m) {
  const Index rows = m.rows(), cols = m.cols();
  std::vector<Int> divs;
  Index t = 0;
  while (t < rows && t < cols) {
    Index pi = -1, pj = -1;
    for (Index i = t; i < rows; ++i)
      for (Index j = t; j < cols; ++j)
        if (m(i, j) != 0 && (pi < 0 || abs(m(i, j)) < abs(m(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    m.row(pi).swap(m.row(t));
    m.col(pj).swap(m.col(t));
    bool again = true;
    while (again) {
      again = false;
      for (Index i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        Int q = m(i, t) / m(t, t);
        m.row(i) -= q * m.row(t);
        if (m(i, t) != 0) {
          m.row(i).swap(m.row(t));
          again = true;
        }
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        Int q = m(t, j) / m(t, t);
        m.col(j) -= q * m.col(t);
        if (m(t, j) != 0) {
          m.col(j).swap(m.col(t));
          again = true;
        }
      }
    }
    divs.push_back(abs(m(t, t)));
    ++t;
  }
  for (size_t i = 0; i + 1 < divs.size(); ++i)
    for (size_t j = i + 1; j < divs.size(); ++j) {
      Int g = gcd(divs[i], divs[j]);
      Int l = divs[i] / g * divs[j];
      divs[i] = g;
      divs[j] = l;
    }
  return divs;
}

MatXi select_columns(const MatXi& m, const std::vector<int>& cols) {
  MatXi out(m.rows(), static_cast<Index>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Index>(j)) = m.col(cols[j]);
  return out;
}

std::vector<int> first_subset(int k) {
  std::vector<int> s(k);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

bool next_subset(std::vector<int>& s, int n) {
  const int k = static_cast<int>(s.size());
  int i = k - 1;
  while (i >= 0 && s[i] == n - k + i) --i;
  if (i < 0) return false;
  ++s[i];
  for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  return true;
}

std::vector<std::vector<int>> all_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> s = first_subset(k);
  do {
    out.push_back(s);
  } while (next_subset(s, n));
  return out;
}

bool gauss_solve(std::vector<std::vector<Rat>> a, std::vector<Rat> b,
                 std::vector<Rat>& x) {
  const size_t n = a.size();
  for (size_t k = 0; k < n; ++k) {
    size_t pivot = n;
    for (size_t i = k; i < n; ++i)
      if (a[i][k] != 0) { pivot = i; break; }
    if (pivot == n) return false;
    std::swap(a[pivot], a[k]);
    std::swap(b[pivot], b[k]);
    for (size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rat f = a[i][k] / a[k][k];
      for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  x.assign(n, Rat(0));
  for (size_t k = n; k-- > 0;) {
    Rat s = b[k];
    for (size_t j = k + 1; j < n; ++j) s -= a[k][j] * x[j];
    x[k] = s / a[k][k];
  }
  return true;
}

bool solve_exact(const MatXi& a, const VecXi& b, VecXi& num, Int& den) {
  const Index n = a.rows();
  if (a.cols() != n || b.size() != n) throw InputError("solve_exact: shape mismatch");
  std::vector<std::vector<Rat>> ar(n, std::vector<Rat>(n));
  std::vector<Rat> br(n);
  for (Index i = 0; i < n; ++i) {
    br[i] = Rat(b(i));
    for (Index j = 0; j < n; ++j) ar[i][j] = Rat(a(i, j));
  }
  std::vector<Rat> x;
  if (!gauss_solve(std::move(ar), std::move(br), x)) return false;
  Int common(1);
  for (Index i = 0; i < n; ++i) common = common / gcd(common, Int(denominator(x[i]))) * Int(denominator(x[i]));
  num.resize(n);
  for (Index i = 0; i < n; ++i)
    num(i) = Int(numerator(x[i])) * (common / Int(denominator(x[i])));
  den = common;
  return true;
}

MatXi row_space_basis(const MatXi& rows) {
  const Index r = rows.rows(), n = rows.cols();
  std::vector<std::vector<Rat>> a(r, std::vector<Rat>(n));
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < n; ++j) a[i][j] = Rat(rows(i, j));
  Index lead = 0;
  std::vector<Index> pivots;
  for (Index c = 0; c < n && lead < r; ++c) {
    Index pivot = -1;
    for (Index i = lead; i < r; ++i)
      if (a[i][c] != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[lead]);
    Rat p = a[lead][c];
    for (Index j = c; j < n; ++j) a[lead][j] /= p;
    for (Index i = 0; i < r; ++i) {
      if (i == lead || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (Index j = c; j < n; ++j) a[i][j] -= f * a[lead][j];
    }
    pivots.push_back(c);
    ++lead;
  }
  MatXi out(lead, n);
  for (Index i = 0; i < lead; ++i) {
    Int common(1);
    for (Index j = 0; j < n; ++j)
      common = common / gcd(common, Int(denominator(a[i][j]))) * Int(denominator(a[i][j]));
    Int g(0);
    for (Index j = 0; j < n; ++j) {
      out(i, j) = Int(numerator(a[i][j])) * (common / Int(denominator(a[i][j])));
      g = gcd(g, out(i, j));
    }
    if (g > 1)
      for (Index j = 0; j < n; ++j) out(i, j) /= g;
  }
  return out;
}

MatXi adjugate(const MatXi& a) {
  const Index n = a.rows();
  if (a.cols() != n) throw InputError("adjugate: matrix not square");
  MatXi out(n, n);
  if (n == 0) return out;
  if (n == 1) {
    out(0, 0) = 1;
    return out;
  }
  MatXi minor(n - 1, n - 1);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      for (Index r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (Index c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc) = a(r, c);
          ++cc;
        }
        ++rr;
      }
      Int cof = det(minor);
      out(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return out;
}

}  // namespace mdisc
