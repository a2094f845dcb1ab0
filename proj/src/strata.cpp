#include "mdisc/strata.hpp"

#include "mdisc/exact_linalg.hpp"
#include "mdisc/tropical.hpp"

#include <algorithm>
#include <map>

namespace mdisc {

namespace {

// sign of det(gram(A)) / det([A; beta]), the constant relating ambient
// determinants to Gale-dual determinants
struct GaleScale {
  Rat c;
  DualMatroid matroid;
};

GaleScale gale_scale(const MatXi& a) {
  GaleScale out{Rat(0), DualMatroid(gale_dual(a))};
  const Index d = a.rows(), m = a.cols();
  const MatXi& beta = out.matroid.gale().beta;
  MatXi stacked(d + beta.rows(), m);
  stacked.topRows(d) = a;
  stacked.bottomRows(beta.rows()) = beta;
  Int den = det(stacked);
  if (den == 0) throw std::logic_error("gale_scale: stack singular");
  MatXi gram = a * a.transpose();
  out.c = make_rat(det(gram), den);
  return out;
}

VecXi sigma_of(const MatXi& beta, std::uint32_t flat) {
  VecXi v = VecXi::Zero(beta.rows());
  for (Index j = 0; j < beta.cols(); ++j)
    if (flat & (1u << j)) v += beta.col(j);
  return v;
}

VecXi chain_cofactors(const MatXi& beta, const FlagChain& chain) {
  const Index s = beta.rows();
  MatXi prefix(s, static_cast<Index>(chain.size()));
  for (size_t k = 0; k < chain.size(); ++k)
    prefix.col(static_cast<Index>(k)) = sigma_of(beta, chain[k]);
  VecXi phi(s);
  MatXi minor(s - 1, prefix.cols());
  for (Index r = 0; r < s; ++r) {
    for (Index i = 0, ii = 0; i < s; ++i) {
      if (i == r) continue;
      minor.row(ii++) = prefix.row(i);
    }
    Int dm = det(minor);
    phi(r) = ((r + s - 1) % 2 == 0) ? dm : -dm;
  }
  return phi;
}

}  // namespace

StratumFingerprint fingerprint(const CayleySystem& sys) {
  if (sys.degenerate) throw InputError("fingerprint: rank-deficient system");
  StratumFingerprint fp;
  fp.m = sys.m();
  fp.d = sys.d();
  GaleScale gs = gale_scale(sys.matrix);
  fp.matroid_id = gs.matroid.bases();
  fp.chains = gs.matroid.maximal_chains();
  const MatXi& beta = gs.matroid.gale().beta;
  const int csign = sign_of(gs.c);
  fp.signs.reserve(fp.chains.size());
  for (const auto& chain : fp.chains) {
    VecXi phi = chain_cofactors(beta, chain);
    std::vector<int> row(static_cast<size_t>(fp.m));
    for (Index i = 0; i < fp.m; ++i)
      row[static_cast<size_t>(i)] = csign * sign_of(phi.dot(beta.col(i)));
    fp.signs.push_back(std::move(row));
  }
  return fp;
}

bool same_stratum(const StratumFingerprint& a, const StratumFingerprint& b) {
  return a.m == b.m && a.d == b.d && a.matroid_id == b.matroid_id &&
         a.chains == b.chains && a.signs == b.signs;
}

std::vector<Int> chain_minor_form(Index m, Index d, const FlagChain& chain, Index col,
                                  const std::vector<std::vector<int>>& subsets) {
  const Index e_cols = m - d;  // indicator columns: e_J1..e_J_{m-d-1}, e_col
  MatXi indicators = MatXi::Zero(m, e_cols);
  for (size_t k = 0; k < chain.size(); ++k)
    for (Index j = 0; j < m; ++j)
      if (chain[k] & (1u << j)) indicators(j, static_cast<Index>(k)) = 1;
  indicators(col, e_cols - 1) = 1;

  // Laplace along the indicator columns: det(A^T | E) =
  //   sum over row sets T of size m-d of sign(T) * p_{[m] minus T} * det(E[T])
  long fixed = 0;
  for (Index j = d + 1; j <= m; ++j) fixed += static_cast<long>(j);

  std::vector<Int> form(subsets.size(), Int(0));
  std::vector<int> complement(static_cast<size_t>(e_cols));
  std::vector<char> in_subset(static_cast<size_t>(m));
  MatXi block(e_cols, e_cols);
  for (size_t si = 0; si < subsets.size(); ++si) {
    const auto& s = subsets[si];
    std::fill(in_subset.begin(), in_subset.end(), 0);
    for (int j : s) in_subset[static_cast<size_t>(j)] = 1;
    long tsum = 0;
    for (Index j = 0, k = 0; j < m; ++j)
      if (!in_subset[static_cast<size_t>(j)]) {
        complement[static_cast<size_t>(k)] = static_cast<int>(j);
        tsum += static_cast<long>(j) + 1;
        ++k;
      }
    for (Index r = 0; r < e_cols; ++r)
      block.row(r) = indicators.row(complement[static_cast<size_t>(r)]);
    Int dm = det(block);
    if (dm == 0) continue;
    form[si] = ((tsum + fixed) % 2 == 0) ? dm : -dm;
  }
  return form;
}

MatXi vanishing_forms(Index m, Index d,
                      const std::vector<std::pair<Index, Index>>& blocks,
                      const std::vector<std::vector<int>>& subsets) {
  auto big = all_subsets(static_cast<int>(m), static_cast<int>(d) + 1);
  std::map<std::vector<int>, size_t> index_of;
  for (size_t i = 0; i < subsets.size(); ++i) index_of.emplace(subsets[i], i);

  MatXi rows(static_cast<Index>(blocks.size() * big.size()), static_cast<Index>(subsets.size()));
  rows.setZero();
  Index r = 0;
  for (const auto& blk : blocks) {
    for (const auto& s : big) {
      // coordinate of xi ^ e_I on the (d+1)-subset s:
      // sum over positions k with s[k] in the block of (-1)^{d-k} xi_{s minus s[k]}
      for (size_t k = 0; k < s.size(); ++k) {
        if (s[k] < blk.first || s[k] >= blk.second) continue;
        std::vector<int> reduced;
        reduced.reserve(s.size() - 1);
        for (size_t t = 0; t < s.size(); ++t)
          if (t != k) reduced.push_back(s[t]);
        size_t col = index_of.at(reduced);
        int sgn = ((static_cast<long>(d) - static_cast<long>(k)) % 2 == 0) ? 1 : -1;
        rows(r, static_cast<Index>(col)) += sgn;
      }
      ++r;
    }
  }
  return rows;
}

Rat DegreeFormula::evaluate(const PluckerVector& pv) const {
  if (pv.m != m || pv.d != d || pv.subsets.size() != subsets.size())
    throw InputError("DegreeFormula: incompatible Plucker vector");
  Rat value(0);
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) value += coeffs[i] * Rat(pv.values[i]);
  return value;
}

DegreeFormula fit_degree_formula(
    const std::vector<std::pair<CayleySystem, std::vector<Int>>>& samples, int block,
    const std::pair<CayleySystem, std::vector<Int>>* holdout) {
  if (samples.empty()) throw InputError("fit_degree_formula: no samples");
  const CayleySystem& first = samples.front().first;
  if (block < 0 || block >= static_cast<int>(first.n()))
    throw InputError("fit_degree_formula: block out of range");

  StratumFingerprint fp0 = fingerprint(first);
  for (size_t i = 1; i < samples.size(); ++i)
    if (!same_stratum(fp0, fingerprint(samples[i].first)))
      throw StratumFitError("no linear fit - check stratum");

  // the chain/column support of the formula comes from one ray shoot on the
  // first sample; signs are stratum constants
  DualMatroid matroid(gale_dual(first.matrix));
  RayShootResult rs;
  int attempt = 0;
  for (; attempt < kGenericityRetryLimit; ++attempt) {
    rs = ray_shoot(first.matrix, first.blocks, generic_weight(first.m(), 0, attempt), matroid);
    if (rs.status != RayShootResult::Status::degenerate) break;
  }
  if (rs.status == RayShootResult::Status::degenerate)
    throw GenericityError("genericity failure");

  DegreeFormula out;
  out.m = first.m();
  out.d = first.d();
  out.block = block;
  out.subsets = all_subsets(static_cast<int>(out.m), static_cast<int>(out.d));

  std::vector<Int> form(out.subsets.size(), Int(0));
  const auto blk = first.blocks[static_cast<size_t>(block)];
  for (const auto& contrib : rs.contributions) {
    if (contrib.column < blk.first || contrib.column >= blk.second) continue;
    auto part = chain_minor_form(out.m, out.d, fp0.chains[static_cast<size_t>(contrib.chain)],
                                 contrib.column, out.subsets);
    for (size_t i = 0; i < form.size(); ++i)
      form[i] += Int(contrib.sign) * part[i];
  }

  auto check = [&](const CayleySystem& sys, const Int& expected, const std::vector<Int>& f) {
    PluckerVector pv = plucker(sys);
    Int value(0);
    for (size_t i = 0; i < f.size(); ++i)
      if (f[i] != 0) value += f[i] * pv.values[i];
    return value == expected;
  };
  for (const auto& s : samples)
    if (!check(s.first, s.second[static_cast<size_t>(block)], form))
      throw StratumFitError("no linear fit - check stratum");

  // minimal-norm representative modulo the vanishing forms: subtract the
  // orthogonal projection onto their span (exact rational Gram solve)
  MatXi all_forms = vanishing_forms(out.m, out.d, first.blocks, out.subsets);
  out.vanishing_basis = row_space_basis(all_forms);
  const MatXi& v = out.vanishing_basis;
  out.coeffs.assign(form.size(), Rat(0));
  for (size_t i = 0; i < form.size(); ++i) out.coeffs[i] = Rat(form[i]);
  if (v.rows() > 0) {
    const Index r = v.rows();
    std::vector<std::vector<Rat>> gram(static_cast<size_t>(r),
                                       std::vector<Rat>(static_cast<size_t>(r)));
    std::vector<Rat> rhs(static_cast<size_t>(r));
    for (Index i = 0; i < r; ++i) {
      for (Index j = 0; j < r; ++j) {
        Int g(0);
        for (Index k = 0; k < v.cols(); ++k) g += v(i, k) * v(j, k);
        gram[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(g);
      }
      Int b(0);
      for (Index k = 0; k < v.cols(); ++k) b += v(i, k) * form[static_cast<size_t>(k)];
      rhs[static_cast<size_t>(i)] = Rat(b);
    }
    std::vector<Rat> y;
    if (!gauss_solve(gram, rhs, y))
      throw std::logic_error("fit_degree_formula: singular Gram matrix");
    for (Index k = 0; k < v.cols(); ++k) {
      Rat proj(0);
      for (Index i = 0; i < r; ++i)
        if (v(i, k) != 0) proj += y[static_cast<size_t>(i)] * Rat(v(i, k));
      out.coeffs[static_cast<size_t>(k)] -= proj;
    }
  }

  // the projection only changes the formula by vanishing forms
  for (const auto& s : samples) {
    PluckerVector pv = plucker(s.first);
    if (out.evaluate(pv) != Rat(s.second[static_cast<size_t>(block)]))
      throw std::logic_error("fit_degree_formula: canonicalization broke the fit");
  }
  if (holdout != nullptr) {
    PluckerVector pv = plucker(holdout->first);
    if (out.evaluate(pv) != Rat(holdout->second[static_cast<size_t>(block)]))
      throw StratumFitError("no linear fit - check stratum");
  }
  return out;
}

}  // namespace mdisc
