#pragma once

// Command-line front end, separated from main() so tests can drive it.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mdisc {

struct JobSpec {
  enum class Command { degree, defect, stratum_compare, fit, examples };
  Command command = Command::degree;
  std::vector<std::string> inputs;     // input file paths
  std::string method = "auto";         // planar | tropical | both | auto
  std::uint64_t seed = 0;
  bool override_size_gate = false;
  std::string output_format = "text";  // text | json
  int fit_block = 1;                   // 1-based block index for `fit`
  std::string holdout;                 // optional held-out sample for `fit`
  std::string example_name;            // `examples --run`
  bool list_examples = false;
};

// Exit codes: 0 ok, 2 input error, 3 cross-method disagreement or internal
// bug, 4 size gate refusal, 5 genericity failure.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace mdisc
