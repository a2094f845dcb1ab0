#include "mdisc/cayley.hpp"

#include "mdisc/exact_linalg.hpp"

#include <algorithm>

namespace mdisc {

int CayleySystem::block_of(Index col) const {
  for (size_t k = 0; k < blocks.size(); ++k)
    if (col >= blocks[k].first && col < blocks[k].second) return static_cast<int>(k);
  throw InputError("block_of: column out of range");
}

CayleySystem build_cayley(const std::vector<PointConfig>& configs) {
  if (configs.empty()) throw InputError("build_cayley: no configurations");
  const Index n = static_cast<Index>(configs.size());
  for (const auto& c : configs) {
    validate(c);
    if (c.dim != n)
      throw InputError("build_cayley: configuration dimension differs from the number of blocks");
  }
  Index m = 0;
  for (const auto& c : configs) m += c.count();

  CayleySystem sys;
  sys.configs = configs;
  sys.matrix = MatXi::Zero(2 * n, m);
  Index col = 0;
  for (Index k = 0; k < n; ++k) {
    const auto& c = configs[static_cast<size_t>(k)];
    sys.blocks.emplace_back(col, col + c.count());
    for (Index j = 0; j < c.count(); ++j, ++col) {
      sys.matrix(k, col) = 1;
      for (Index i = 0; i < n; ++i) sys.matrix(n + i, col) = c.points(i, j);
    }
  }
  sys.degenerate = rank_of(sys.matrix) != 2 * n;
  sys.lattice_index = sys.degenerate ? Int(0) : gcd_maximal_minors(sys.matrix);
  return sys;
}

PluckerVector plucker(const CayleySystem& sys) {
  PluckerVector pv;
  pv.m = sys.m();
  pv.d = sys.d();
  pv.subsets = all_subsets(static_cast<int>(pv.m), static_cast<int>(pv.d));
  pv.values.reserve(pv.subsets.size());
  for (const auto& s : pv.subsets) pv.values.push_back(det(select_columns(sys.matrix, s)));
  return pv;
}

Int PluckerVector::gcd_abs() const {
  Int g(0);
  for (const Int& v : values) g = gcd(g, v);
  return g;
}

const Int& PluckerVector::value_at(const std::vector<int>& subset) const {
  auto it = std::lower_bound(subsets.begin(), subsets.end(), subset);
  if (it == subsets.end() || *it != subset) throw InputError("plucker: unknown subset");
  return values[static_cast<size_t>(it - subsets.begin())];
}

}  // namespace mdisc
