// Copyright 2026 The pruw authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>

#include "CLI11.hpp"

#include "commands.h"

int main(int argc, char** argv) {
  CLI::App app{"Private read-update-write simulator for sparse federated learning"};
  app.require_subcommand(1);

  pruw::cli::SimulateOptions sim;
  uint64_t seed = 0;
  int scheme_case = 0;
  auto* simulate = app.add_subcommand("simulate", "Run a seeded simulation");
  simulate->add_option("--config", sim.config_path, "Simulation config (JSON)")
      ->required();
  auto* seed_opt = simulate->add_option("--seed", seed, "Override the root seed");
  auto* case_opt =
      simulate->add_option("--case", scheme_case, "Override the scheme (1 or 2)");
  simulate->add_option("--out", sim.out_dir, "Output directory")
      ->capture_default_str();

  pruw::cli::LeakageSweepOptions sweep;
  double epsilon = 0;
  auto* leak = app.add_subcommand("leakage-sweep",
                                  "Index-leakage entropies across segment counts");
  leak->add_option("--P", sweep.subpackets, "Subpackets")->capture_default_str();
  leak->add_option("--Pr", sweep.sparse, "Sparse subpackets per user")
      ->capture_default_str();
  leak->add_option("--B", sweep.segments, "Segment counts, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  auto* eps_opt = leak->add_option("--epsilon", epsilon, "Leakage budget in bits");
  leak->add_option("--out", sweep.out_csv, "CSV path (default: stdout)");

  pruw::cli::CostsOptions costs;
  int costs_case = 0;
  auto* cost = app.add_subcommand("costs", "Closed-form costs for a config");
  cost->add_option("--config", costs.config_path, "Simulation config (JSON)")
      ->required();
  auto* costs_case_opt =
      cost->add_option("--case", costs_case, "Override the scheme (1 or 2)");

  auto* verify = app.add_subcommand("verify-examples",
                                    "Replay the reference worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return pruw::cli::kExitConfigError;
  }

  if (simulate->parsed()) {
    if (*seed_opt) sim.seed = seed;
    if (*case_opt) sim.scheme_case = scheme_case;
    return pruw::cli::Simulate(sim, std::cout, std::cerr);
  }
  if (leak->parsed()) {
    if (*eps_opt) sweep.epsilon = epsilon;
    return pruw::cli::LeakageSweep(sweep, std::cout, std::cerr);
  }
  if (cost->parsed()) {
    if (*costs_case_opt) costs.scheme_case = costs_case;
    return pruw::cli::Costs(costs, std::cout, std::cerr);
  }
  if (verify->parsed()) return pruw::cli::VerifyExamples(std::cout, std::cerr);
  return pruw::cli::kExitConfigError;
}
