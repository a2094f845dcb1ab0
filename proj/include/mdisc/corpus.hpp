#pragma once

// Built-in example corpus with pinned expected results, used by the CLI
// `examples` subcommand and the acceptance suite.

#include "mdisc/numeric.hpp"
#include "mdisc/point_config.hpp"

#include <string>
#include <vector>

namespace mdisc {

struct CorpusEntry {
  std::string name;
  std::string note;  // where the expected values come from
  std::vector<PointConfig> configs;
  std::vector<Int> expected_cycle;  // per-block degrees of the cycle
  Int expected_index;               // i(A)
  bool expected_defective = false;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_entry(const std::string& name);

// standard configuration builders
PointConfig unit_square_config(const std::string& label = "A");
// vertices of d * sigma_2 only (d may be negative); 3 points
PointConfig sparse_triangle_config(long d, const std::string& label = "A");
// all lattice points of d * s_2 (d may be negative)
PointConfig dense_triangle_config(long d, const std::string& label = "A");
// supports of x + y^p + z^p, x^q + y + z^q, x^r + y^r + z
std::vector<PointConfig> trinomial_configs(long p, long q, long r);
// supports of c0 + c1 x1^di + ... + cn xn^di for i = 1..n
std::vector<PointConfig> pure_power_configs(const std::vector<long>& ds);

}  // namespace mdisc
