#include "mdisc/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"mdisc - exact multidegrees of mixed discriminant cycles"};
  app.require_subcommand(1);

  mdisc::JobSpec job;
  bool json = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", job.seed, "seed for the deterministic weight generator");
    cmd->add_flag("--force", job.override_size_gate,
                  "override the instance size gate (may run for a long time)");
    cmd->add_flag("--json", json, "JSON output");
  };

  auto* degree = app.add_subcommand("degree", "multidegree of the mixed discriminant cycle");
  degree->add_option("file", job.inputs, "input JSON file")->required()->expected(1);
  degree->add_option("--method", job.method, "planar | tropical | both | auto")
      ->check(CLI::IsMember({"planar", "tropical", "both", "auto"}));
  add_common(degree);

  auto* defect = app.add_subcommand("defect", "defectiveness verdict");
  defect->add_option("file", job.inputs, "input JSON file")->required()->expected(1);
  add_common(defect);

  auto* stratum = app.add_subcommand("stratum", "tropical matroid strata");
  auto* compare = stratum->add_subcommand("compare", "compare the strata of two systems");
  compare->add_option("files", job.inputs, "two input JSON files")->required()->expected(2);
  add_common(compare);

  auto* fit = app.add_subcommand("fit", "fit the linear degree formula on co-stratal samples");
  fit->add_option("--block", job.fit_block, "1-based block index")->required();
  fit->add_option("--holdout", job.holdout, "held-out sample that must be reproduced exactly");
  fit->add_option("samples", job.inputs, "sample JSON files")->required();
  add_common(fit);

  auto* examples = app.add_subcommand("examples", "built-in example corpus");
  examples->add_flag("--list", job.list_examples, "list example names");
  examples->add_option("--run", job.example_name, "run one example (or 'all')");
  add_common(examples);

  CLI11_PARSE(app, argc, argv);

  if (degree->parsed()) job.command = mdisc::JobSpec::Command::degree;
  if (defect->parsed()) job.command = mdisc::JobSpec::Command::defect;
  if (stratum->parsed()) {
    if (!compare->parsed()) {
      std::cerr << "error: stratum requires the compare subcommand\n";
      return 2;
    }
    job.command = mdisc::JobSpec::Command::stratum_compare;
  }
  if (fit->parsed()) job.command = mdisc::JobSpec::Command::fit;
  if (examples->parsed()) job.command = mdisc::JobSpec::Command::examples;
  job.output_format = json ? "json" : "text";

  return mdisc::run(job, std::cout, std::cerr);
}
