// Copyright 2026 The qfeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qfeas: feasibility estimates and noisy-circuit simulation from scenario files.
//
//   qfeas estimate <scenario.json>   exit 0 feasible, 2 infeasible, 3 no QEC plan
//   qfeas simulate <scenario.json>
//   qfeas presets
//   qfeas fit <table.csv>
//
// Common flags: --format {table,machine}, --output <path>. simulate also takes
// --seed, --trajectories and --threads. Usage and parse errors exit with 1.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qfeas/qfeas.hpp"

namespace {

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct OutputOptions {
  std::string format = "table";
  std::string output;
};

void add_output_options(CLI::App *cmd, OutputOptions &o) {
  cmd->add_option("--format", o.format, "table or machine")
      ->check(CLI::IsMember({"table", "machine"}));
  cmd->add_option("--output", o.output, "write the report here instead of stdout");
}

void emit(const qfeas::Report &rep, const OutputOptions &o) {
  const std::string text = o.format == "machine" ? rep.doc.dump(2) + "\n" : rep.table;
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + o.output);
  out << text;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Quantum computation feasibility estimator"};
  app.require_subcommand(1);

  OutputOptions out;
  std::string scenario_path, data_path;
  std::optional<std::uint64_t> seed, trajectories;
  unsigned threads = 0;

  auto *estimate = app.add_subcommand("estimate", "feasibility and engineering budgets");
  estimate->add_option("scenario", scenario_path, "scenario file (JSON)")->required();
  add_output_options(estimate, out);

  auto *simulate = app.add_subcommand("simulate", "Monte-Carlo noisy-circuit runs");
  simulate->add_option("scenario", scenario_path, "scenario file (JSON)")->required();
  simulate->add_option("--seed", seed, "trajectory seed (overrides the scenario)");
  simulate->add_option("--trajectories", trajectories, "trajectories per estimate")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--threads", threads, "worker threads, 0 = all cores");
  add_output_options(simulate, out);

  auto *presets = app.add_subcommand("presets", "list hardware presets");
  add_output_options(presets, out);

  auto *fit = app.add_subcommand("fit", "fit error rates to a (counts, log F) table");
  fit->add_option("data", data_path, "CSV with header n0,n1,n2,log_fidelity[,std_error]")->required();
  add_output_options(fit, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : qfeas::kExitUsage;
  }

  try {
    qfeas::Report rep;
    if (*estimate) {
      rep = qfeas::run_estimate(qfeas::parse_scenario(read_file(scenario_path)));
    } else if (*simulate) {
      qfeas::Scenario s = qfeas::parse_scenario(read_file(scenario_path));
      if (!s.simulation) throw qfeas::ValidationError("scenario has no simulation block");
      if (seed) s.simulation->seed = *seed;
      if (trajectories) s.simulation->n_traj = *trajectories;
      rep = qfeas::run_simulate(s, threads);
    } else if (*presets) {
      rep = qfeas::run_presets();
    } else {
      rep = qfeas::run_fit(qfeas::parse_fit_table(read_file(data_path)));
    }
    emit(rep, out);
    return rep.exit_code;
  } catch (const qfeas::AboveThreshold &e) {
    std::cerr << "error: " << e.what() << '\n';
    return qfeas::kExitNoCodePlan;
  } catch (const qfeas::FloorUnreachable &e) {
    std::cerr << "error: " << e.what() << '\n';
    return qfeas::kExitNoCodePlan;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return qfeas::kExitUsage;
  }
}
