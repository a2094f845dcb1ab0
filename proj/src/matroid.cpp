#include "mdisc/matroid.hpp"

#include "mdisc/exact_linalg.hpp"

#include <algorithm>
#include <map>

namespace mdisc {

namespace {

MatXi columns_of(const MatXi& beta, std::uint32_t set) {
  std::vector<int> cols;
  for (int j = 0; j < beta.cols(); ++j)
    if (set & (1u << j)) cols.push_back(j);
  return select_columns(beta, cols);
}

}  // namespace

GaleDual gale_dual(const MatXi& a) {
  if (rank_of(a) != a.rows()) throw InputError("rank deficient");
  return GaleDual{kernel_basis(a)};
}

DualMatroid::DualMatroid(GaleDual gale) : gale_(std::move(gale)) {
  const Index m = gale_.m();
  const int corank = static_cast<int>(gale_.corank());
  if (m > 31) throw SizeGateError("matroid ground set too large for bitmask enumeration");

  std::map<std::uint32_t, int> rank_memo;
  auto rank_m = [&](std::uint32_t s) {
    auto it = rank_memo.find(s);
    if (it != rank_memo.end()) return it->second;
    int r = rank_of_subset(s);
    rank_memo.emplace(s, r);
    return r;
  };
  std::map<std::uint32_t, std::uint32_t> closure_memo;
  auto close_m = [&](std::uint32_t s) {
    auto it = closure_memo.find(s);
    if (it != closure_memo.end()) return it->second;
    int r = rank_m(s);
    std::uint32_t out = s;
    for (Index j = 0; j < m; ++j) {
      std::uint32_t bit = 1u << j;
      if ((s & bit) == 0 && rank_m(s | bit) == r) out |= bit;
    }
    closure_memo.emplace(s, out);
    return out;
  };

  // flats level by level: rank k+1 flats are closures of (flat, extra point)
  flats_by_rank_.assign(static_cast<size_t>(corank) + 1, {});
  flats_by_rank_[0] = {close_m(0)};
  for (int k = 0; k + 1 <= corank; ++k) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t f : flats_by_rank_[static_cast<size_t>(k)])
      for (Index j = 0; j < m; ++j) {
        std::uint32_t bit = 1u << j;
        if (f & bit) continue;
        std::uint32_t g = close_m(f | bit);
        if (rank_m(g) == k + 1) next.push_back(g);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    flats_by_rank_[static_cast<size_t>(k) + 1] = std::move(next);
  }

  // maximal chains by depth-first extension through the flat levels
  if (corank == 1) {
    chains_.push_back({});
  } else if (corank >= 2) {
    std::vector<std::uint32_t> stack;
    auto dfs = [&](auto&& self, std::uint32_t flat, int r) -> void {
      stack.push_back(flat);
      if (r == corank - 1) {
        chains_.push_back(stack);
      } else {
        for (std::uint32_t g : flats_by_rank_[static_cast<size_t>(r) + 1])
          if ((g & flat) == flat && g != flat) self(self, g, r + 1);
      }
      stack.pop_back();
    };
    for (std::uint32_t f : flats_by_rank_[1]) dfs(dfs, f, 1);
  }
}

int DualMatroid::rank_of_subset(std::uint32_t set) const {
  if (set == 0) return 0;
  return static_cast<int>(rank_of(columns_of(gale_.beta, set)));
}

std::uint32_t DualMatroid::closure(std::uint32_t set) const {
  int r = rank_of_subset(set);
  std::uint32_t out = set;
  for (Index j = 0; j < gale_.m(); ++j) {
    std::uint32_t bit = 1u << j;
    if ((set & bit) == 0 && rank_of_subset(set | bit) == r) out |= bit;
  }
  return out;
}

std::vector<std::uint32_t> DualMatroid::flats_of_rank(int k) const {
  if (k < 0 || k > static_cast<int>(rank()))
    throw InputError("flats_of_rank: rank out of range");
  return flats_by_rank_[static_cast<size_t>(k)];
}

std::vector<std::uint32_t> DualMatroid::bases() const {
  const int m = static_cast<int>(ground_size());
  const int r = static_cast<int>(rank());
  std::vector<std::uint32_t> out;
  if (r == 0) {
    out.push_back(0);
    return out;
  }
  std::vector<int> s = first_subset(r);
  do {
    std::uint32_t mask = 0;
    for (int j : s) mask |= 1u << j;
    if (rank_of_subset(mask) == r) out.push_back(mask);
  } while (next_subset(s, m));
  return out;
}

}  // namespace mdisc
