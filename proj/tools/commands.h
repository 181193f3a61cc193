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

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace pruw::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitOracleViolation = 2;

struct SimulateOptions {
  std::string config_path;
  std::optional<uint64_t> seed;
  std::optional<int> scheme_case;  // 1 or 2
  std::string out_dir = "pruw-out";
};

// Writes config.json, rounds.json, costs.csv, trace_db<n>.csv,
// storage_db<n>.bin and the provisioning/ artifacts into out_dir.
int Simulate(const SimulateOptions& opts, std::ostream& out, std::ostream& err);

struct LeakageSweepOptions {
  size_t subpackets = 18;
  size_t sparse = 3;
  std::vector<size_t> segments = {1, 2, 3, 6, 9};
  std::optional<double> epsilon;
  std::string out_csv;  // empty: CSV goes to out
};

int LeakageSweep(const LeakageSweepOptions& opts, std::ostream& out,
                 std::ostream& err);

struct CostsOptions {
  std::string config_path;
  std::optional<int> scheme_case;
};

// Prints a JSON object with closed-form costs and storage complexity.
int Costs(const CostsOptions& opts, std::ostream& out, std::ostream& err);

int VerifyExamples(std::ostream& out, std::ostream& err);

}  // namespace pruw::cli
