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

#include "commands.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "nlohmann/json.hpp"

#include "pruw/accounting.h"
#include "pruw/coded_storage.h"
#include "pruw/errors.h"
#include "pruw/leakage.h"
#include "pruw/simulation.h"
#include "pruw/worked_examples.h"

namespace pruw::cli {
namespace {

namespace fs = std::filesystem;

nlohmann::json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " +
                      e.what());
  }
}

SimulationConfig LoadConfig(const std::string& path,
                            std::optional<uint64_t> seed,
                            std::optional<int> scheme_case) {
  nlohmann::json j = ReadJsonFile(path);
  if (seed && j.is_object()) j["seed"] = *seed;
  if (scheme_case && j.is_object()) {
    if (*scheme_case != 1 && *scheme_case != 2) {
      throw ConfigError("--case must be 1 or 2");
    }
    j["scheme"] = *scheme_case == 1 ? "case1" : "case2";
  }
  return ParseSimulationConfig(j);
}

void WriteFile(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  out << content;
}

}  // namespace

int Simulate(const SimulateOptions& opts, std::ostream& out, std::ostream& err) {
  SimulationConfig config;
  try {
    config = LoadConfig(opts.config_path, opts.seed, opts.scheme_case);
  } catch (const PruwError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }

  const fs::path dir(opts.out_dir);
  std::error_code ec;
  fs::create_directories(dir / "provisioning", ec);
  if (ec) {
    err << "config error: cannot create output directory '" << opts.out_dir
        << "': " << ec.message() << '\n';
    return kExitConfigError;
  }

  try {
    Simulation sim(config);
    const SystemParams& params = sim.params();
    WriteFile(dir / "config.json", SimulationConfigToJson(config).dump(2) + "\n");
    WriteFile(dir / "provisioning" / "permutations.json",
              PermutationSetToJson(sim.permutations()).dump(2) + "\n");
    for (const auto& node : sim.nodes()) {
      WriteFile(dir / "provisioning" /
                    ("reversers_db" + std::to_string(node.index() + 1) + ".json"),
                ReverserSetToJson(node.reversers(), params.field).dump() + "\n");
    }

    nlohmann::json rounds = nlohmann::json::array();
    std::vector<CostReport> costs;
    for (size_t t = 0; t < config.rounds; ++t) {
      RoundReport report;
      try {
        report = sim.RunRound();
      } catch (const OracleViolation& e) {
        err << "oracle violation: " << e.what() << '\n';
        return kExitOracleViolation;
      }
      rounds.push_back(RoundReportToJson(report));
      costs.push_back(report.costs);
    }
    WriteFile(dir / "rounds.json", rounds.dump(2) + "\n");

    std::ostringstream csv;
    WriteCostCsv(csv, costs);
    WriteFile(dir / "costs.csv", csv.str());
    for (const auto& node : sim.nodes()) {
      const std::string n = std::to_string(node.index() + 1);
      std::ostringstream trace;
      WriteTraceCsv(trace, node.trace());
      WriteFile(dir / ("trace_db" + n + ".csv"), trace.str());
      WriteFile(dir / ("storage_db" + n + ".bin"),
                SerializeStorageBinary(node.storage(), params.field));
    }
    out << "simulate: " << config.rounds << " round(s), "
        << config.users_per_round << " user(s)/round, " << ToString(params.scheme)
        << " N=" << params.num_databases << " P=" << params.num_subpackets
        << " B=" << params.num_segments << ": all oracle checks passed\n";
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const OracleViolation& e) {
    err << "oracle violation: " << e.what() << '\n';
    return kExitOracleViolation;
  }
  return kExitOk;
}

int LeakageSweep(const LeakageSweepOptions& opts, std::ostream& out,
                 std::ostream& err) {
  std::vector<leakage::SweepRow> rows;
  try {
    rows = leakage::SweepLeakage(opts.subpackets, opts.sparse, opts.segments);
  } catch (const PruwError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }
  if (opts.out_csv.empty()) {
    leakage::WriteSweepCsv(out, rows);
  } else {
    std::ofstream csv(opts.out_csv);
    if (!csv) {
      err << "config error: cannot write '" << opts.out_csv << "'\n";
      return kExitConfigError;
    }
    leakage::WriteSweepCsv(csv, rows);
  }
  if (opts.epsilon) {
    for (Scheme s : {Scheme::kCase1, Scheme::kCase2}) {
      auto best = leakage::MaxSegmentsWithinBudget(rows, *opts.epsilon, s);
      out << ToString(s) << ": max B within epsilon=" << *opts.epsilon << ": "
          << (best ? std::to_string(*best) : std::string("none")) << '\n';
    }
  }
  return kExitOk;
}

int Costs(const CostsOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const SimulationConfig config =
        LoadConfig(opts.config_path, std::nullopt, opts.scheme_case);
    const SystemParams& p = config.params;
    const FormulaCosts f = ComputeFormulaCosts(p);
    const StorageComplexity s = ComputeStorageComplexity(p);
    nlohmann::json j = {
        {"scheme", ToString(p.scheme)},
        {"N", p.num_databases},
        {"P", p.num_subpackets},
        {"B", p.num_segments},
        {"ell", p.subpacket_size},
        {"L", p.model_size()},
        {"q", p.field.modulus()},
        {"reading_cost", f.reading},
        {"writing_cost", f.writing},
        {"reading_cost_ceil", ToString(f.reading_ceil)},
        {"writing_cost_ceil", ToString(f.writing_ceil)},
        {"storage_symbols", s.symbols},
        {"storage_complexity", s.label},
    };
    out << j.dump(2) << '\n';
  } catch (const PruwError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }
  return kExitOk;
}

int VerifyExamples(std::ostream& out, std::ostream& err) {
  const auto checks = VerifyWorkedExamples();
  size_t failed = 0;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) {
      out << ": " << c.detail;
      ++failed;
    }
    out << '\n';
  }
  out << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  if (failed > 0) {
    err << failed << " worked-example check(s) failed\n";
    return kExitOracleViolation;
  }
  return kExitOk;
}

}  // namespace pruw::cli
