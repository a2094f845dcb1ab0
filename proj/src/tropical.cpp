#include "mdisc/tropical.hpp"

#include "mdisc/exact_linalg.hpp"
#include "mdisc/planar.hpp"

#include <map>
#include <random>

namespace mdisc {

VecXi generic_weight(Index m, std::uint64_t seed, int attempt) {
  if (m < 1) throw InputError("generic_weight: m must be positive");
  std::mt19937_64 gen(seed);
  gen.discard(static_cast<std::uint64_t>(attempt) * static_cast<std::uint64_t>(m));
  VecXi w(m);
  for (Index i = 0; i < m; ++i) {
    std::uint64_t r = gen();
    w(i) = Int(static_cast<long long>(r % 2000001ull) - 1000000ll);
  }
  return w;
}

void check_size_gate(Index m, Index d, bool override_size_gate) {
  if (override_size_gate) return;
  if (m - d > 8 || m > 24)
    throw SizeGateError(
        "instance too large for exhaustive chain enumeration (corank " +
        std::to_string(m - d) + ", columns " + std::to_string(m) +
        "); pass the override flag to attempt it anyway");
}

namespace {

// cofactor functional: det([p | c]) = phi . c for the corank x (corank-1)
// sigma prefix p
VecXi column_cofactors(const MatXi& p) {
  const Index s = p.rows();
  VecXi phi(s);
  MatXi minor(s - 1, p.cols());
  for (Index r = 0; r < s; ++r) {
    for (Index i = 0, ii = 0; i < s; ++i) {
      if (i == r) continue;
      minor.row(ii++) = p.row(i);
    }
    Int d = det(minor);
    phi(r) = ((r + s - 1) % 2 == 0) ? d : -d;
  }
  return phi;
}

// deterministic choice of corank-1 independent rows of p
std::vector<Index> independent_rows(const MatXi& p) {
  const Index want = p.cols();
  std::vector<Index> rows;
  for (Index r = 0; r < p.rows() && static_cast<Index>(rows.size()) < want; ++r) {
    MatXi probe(static_cast<Index>(rows.size()) + 1, p.cols());
    for (size_t i = 0; i < rows.size(); ++i) probe.row(static_cast<Index>(i)) = p.row(rows[i]);
    probe.row(static_cast<Index>(rows.size())) = p.row(r);
    if (rank_of(probe) == probe.rows()) rows.push_back(r);
  }
  return rows;
}

}  // namespace

RayShootResult ray_shoot(const MatXi& a,
                         const std::vector<std::pair<Index, Index>>& blocks,
                         const VecXi& w) {
  DualMatroid matroid(gale_dual(a));
  return ray_shoot(a, blocks, w, matroid);
}

RayShootResult ray_shoot(const MatXi& a,
                         const std::vector<std::pair<Index, Index>>& blocks,
                         const VecXi& w, const DualMatroid& matroid) {
  const Index d = a.rows(), m = a.cols();
  if (w.size() != m) throw InputError("ray_shoot: weight length mismatch");
  {
    MatXi stacked(d + 1, m);
    stacked.topRows(d) = a;
    for (Index j = 0; j < m; ++j) stacked(d, j) = 1;
    if (rank_of(stacked) != d)
      throw InputError("ray_shoot: all-ones vector not in the row span");
  }
  const MatXi& beta = matroid.gale().beta;
  const Index s = matroid.gale().corank();

  RayShootResult out;
  out.w = w;
  out.exponents.assign(static_cast<size_t>(m), Int(0));

  // eq of Gale duality: det(A^T, e_J1, ..., e_i) = c * det(sigma_J1, ..., b_i)
  Rat c;
  {
    MatXi gram = a * a.transpose();
    MatXi stacked(d + s, m);
    stacked.topRows(d) = a;
    stacked.bottomRows(s) = beta;
    Int den = det(stacked);
    if (den == 0) throw std::logic_error("ray_shoot: Gale stack singular");
    c = make_rat(det(gram), den);
  }

  VecXi beta_w = beta * w;

  std::map<std::uint32_t, VecXi> sigma_memo;
  auto sigma_of = [&](std::uint32_t flat) {
    auto it = sigma_memo.find(flat);
    if (it != sigma_memo.end()) return it->second;
    VecXi v = VecXi::Zero(s);
    for (Index j = 0; j < m; ++j)
      if (flat & (1u << j)) v += beta.col(j);
    sigma_memo.emplace(flat, v);
    return v;
  };

  const auto& chains = matroid.maximal_chains();
  for (size_t ci = 0; ci < chains.size(); ++ci) {
    const FlagChain& chain = chains[ci];
    MatXi prefix(s, static_cast<Index>(chain.size()));
    for (size_t k = 0; k < chain.size(); ++k) prefix.col(static_cast<Index>(k)) = sigma_of(chain[k]);

    VecXi phi = column_cofactors(prefix);
    bool nonzero = false;
    for (Index r = 0; r < s; ++r)
      if (phi(r) != 0) { nonzero = true; break; }
    if (!nonzero) continue;  // dependent sigma system, cone is lower-dimensional

    Int d_beta = phi.dot(beta_w);
    if (d_beta == 0) {
      out.status = RayShootResult::Status::degenerate;
      return out;
    }

    MatXi adj;
    std::vector<Index> rows;
    Int det_rows(0);
    if (prefix.cols() > 0) {
      rows = independent_rows(prefix);
      MatXi square(prefix.cols(), prefix.cols());
      for (size_t i = 0; i < rows.size(); ++i) square.row(static_cast<Index>(i)) = prefix.row(rows[i]);
      adj = adjugate(square);
      det_rows = det(square);
    }

    for (Index i = 0; i < m; ++i) {
      Int d_phi = phi.dot(beta.col(i));
      if (d_phi == 0) continue;  // singular with b_i, skip the chain for this column
      // coefficient of -b_i: t = -d_beta / d_phi, needed strictly positive
      if (sign_of(d_beta) * sign_of(d_phi) >= 0) continue;
      bool member = true;
      if (prefix.cols() > 0) {
        VecXi z(static_cast<Index>(rows.size()));
        for (size_t r = 0; r < rows.size(); ++r)
          z(static_cast<Index>(r)) = d_phi * beta_w(rows[r]) - d_beta * beta(rows[r], i);
        VecXi y = adj * z;
        int scale = sign_of(det_rows) * sign_of(d_phi);
        for (Index k = 0; k < y.size(); ++k) {
          if (y(k) == 0) {
            out.status = RayShootResult::Status::degenerate;
            return out;
          }
          if (sign_of(y(k)) * scale < 0) { member = false; break; }
        }
      }
      if (!member) continue;
      Rat full = c * Rat(d_phi);
      if (denominator(full) != 1)
        throw std::logic_error("ray_shoot: non-integral chain determinant");
      Int value = Int(numerator(full));
      out.exponents[static_cast<size_t>(i)] += abs(value);
      out.contributions.push_back({static_cast<int>(ci), static_cast<int>(i), abs(value),
                                   sign_of(value)});
    }
  }

  out.block_degrees.clear();
  Int total(0);
  for (const auto& b : blocks) {
    Int sum(0);
    for (Index i = b.first; i < b.second; ++i) sum += out.exponents[static_cast<size_t>(i)];
    out.block_degrees.push_back(sum);
    total += sum;
  }
  if (total == 0) out.status = RayShootResult::Status::defective;
  return out;
}

TropicalDegree tropical_degree(const CayleySystem& sys, std::uint64_t seed,
                               bool override_size_gate) {
  TropicalDegree out;
  out.lattice_index = sys.lattice_index;
  if (sys.degenerate) {
    out.status = TropicalDegree::Status::degenerate;
    out.cycle.assign(static_cast<size_t>(sys.n()), Int(0));
    out.reduced = out.cycle;
    return out;
  }
  check_size_gate(sys.m(), sys.d(), override_size_gate);

  DualMatroid matroid(gale_dual(sys.matrix));
  std::vector<std::vector<Int>> degrees;
  int total_retries = 0;
  VecXi first_w;
  for (int trial = 0; trial < 3; ++trial) {
    std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(trial);
    RayShootResult rs;
    int attempt = 0;
    for (; attempt < kGenericityRetryLimit; ++attempt) {
      VecXi w = generic_weight(sys.m(), trial_seed, attempt);
      rs = ray_shoot(sys.matrix, sys.blocks, w, matroid);
      if (rs.status != RayShootResult::Status::degenerate) break;
      ++total_retries;
    }
    if (rs.status == RayShootResult::Status::degenerate)
      throw GenericityError("genericity failure");
    if (trial == 0) first_w = rs.w;
    degrees.push_back(rs.block_degrees);
  }
  if (degrees[0] != degrees[1] || degrees[0] != degrees[2])
    throw std::logic_error("instability: report bug");

  out.cycle = degrees[0];
  out.certificate = WeightCertificate{first_w, seed, total_retries};
  bool all_zero = true;
  for (const Int& v : out.cycle) {
    if (v % sys.lattice_index != 0)
      throw std::logic_error("tropical_degree: block degree not divisible by i(A)");
    out.reduced.push_back(v / sys.lattice_index);
    if (v != 0) all_zero = false;
  }
  out.status = all_zero ? TropicalDegree::Status::defective : TropicalDegree::Status::ok;
  return out;
}

DefectVerdict is_defective(const CayleySystem& sys, std::uint64_t seed, int trials,
                           bool override_size_gate) {
  if (sys.degenerate) return {true, "degenerate-rank", false};
  if (sys.n() == 2) {
    const PointConfig& a1 = sys.configs[0];
    const PointConfig& a2 = sys.configs[1];
    bool full1 = full_dimensional(a1), full2 = full_dimensional(a2);
    if (full1 && full2) {
      auto rep = planar_defective(a1, a2);
      return {rep.defective, "planar-exact", true};
    }
    if (full1 && affine_dim(a2) == 1)
      return {one_dim_degree(a1, a2).defective, "planar-onedim-exact", true};
    if (full2 && affine_dim(a1) == 1)
      return {one_dim_degree(a2, a1).defective, "planar-onedim-exact", true};
  }
  check_size_gate(sys.m(), sys.d(), override_size_gate);
  DualMatroid matroid(gale_dual(sys.matrix));
  for (int trial = 0; trial < trials; ++trial) {
    std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(trial);
    RayShootResult rs;
    int attempt = 0;
    for (; attempt < kGenericityRetryLimit; ++attempt) {
      rs = ray_shoot(sys.matrix, sys.blocks, generic_weight(sys.m(), trial_seed, attempt),
                     matroid);
      if (rs.status != RayShootResult::Status::degenerate) break;
    }
    if (rs.status == RayShootResult::Status::degenerate)
      throw GenericityError("genericity failure");
    if (rs.status != RayShootResult::Status::defective)
      return {false, "monte-carlo", false};
  }
  return {true, "monte-carlo", false};
}

}  // namespace mdisc
