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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "nlohmann/json.hpp"

#include "pruw/accounting.h"
#include "pruw/client.h"
#include "pruw/coded_storage.h"
#include "pruw/database_node.h"
#include "pruw/params.h"
#include "pruw/permutations.h"

namespace pruw {

struct SimulationConfig {
  SystemParams params;
  size_t users_per_round = 1;
  size_t rounds = 1;
  uint64_t seed = 0;
  ScoreDistribution score_distribution = ScoreDistribution::kHeavyTailed;
  double quantization_scale = 65536.0;
  // Replaces the sampled permutations, e.g. to replay a worked example.
  std::optional<PermutationSet> permutations;
};

// Parses the documented JSON schema; unknown keys are rejected.
SimulationConfig ParseSimulationConfig(const nlohmann::json& j);
nlohmann::json SimulationConfigToJson(const SimulationConfig& config);

// Plaintext copy of the model, P x ell.
using ShadowModel = std::vector<SubpacketPlain>;

// Everything the coordinator hands out before leaving.
struct Provisioning {
  PermutationSet permutations;  // to users
  std::vector<ReverserSet> reversers;  // to database n
  std::vector<StorageState> storage;  // to database n
  ShadowModel shadow;  // kept by the simulator as an oracle
};

// Draws from the "coordinator" and "model" sub-streams of config.seed.
Provisioning CoordinatorInit(const SimulationConfig& config);

struct UserWrite {
  size_t user = 0;  // one-based
  std::vector<RealIndex> real_pairs;
  std::vector<PermutedIndex> permuted_pairs;  // database-visible
  std::vector<SubpacketPlain> deltas;
};

struct RoundReport {
  size_t round = 0;
  std::vector<UserWrite> writes;
  std::vector<PermutedIndex> downlink_permuted;  // database-visible
  std::vector<RealIndex> downlink_real;
  UpdateHistogram histogram;  // database-visible
  CostReport costs;
  size_t read_checks = 0;  // subpackets decoded and compared
  size_t model_checks = 0;
};

nlohmann::json RoundReportToJson(const RoundReport& report);

// Overrides the synthetic gradient generator: (round, user) -> P x ell.
using GradientSource =
    std::function<PseudoGradients(size_t round, size_t user)>;

class Simulation {
 public:
  explicit Simulation(SimulationConfig config);

  // Write phase for every user, downlink selection, read phase for every
  // user, then a full-model decode against the shadow. Throws OracleViolation
  // on any mismatch.
  RoundReport RunRound();
  std::vector<RoundReport> Run();

  void set_gradient_source(GradientSource source) {
    gradient_source_ = std::move(source);
  }
  // Disables the per-round decode of every subpacket.
  void set_full_model_check(bool enabled) { full_model_check_ = enabled; }

  // Real-domain read of one subpacket through the protocol.
  SubpacketPlain ReadSubpacket(RealIndex at) const;
  // Throws OracleViolation unless every subpacket decodes to the shadow.
  void VerifyModel() const;

  const SimulationConfig& config() const { return config_; }
  const SystemParams& params() const { return config_.params; }
  const PermutationSet& permutations() const { return permutations_; }
  const std::vector<DatabaseNode>& nodes() const { return nodes_; }
  const ShadowModel& shadow() const { return shadow_; }
  size_t rounds_completed() const { return round_; }

  std::vector<NodeTraceRow> trace_rows(size_t database) const;

 private:
  SimulationConfig config_;
  PermutationSet permutations_;
  std::vector<DatabaseNode> nodes_;
  ShadowModel shadow_;
  size_t round_ = 0;
  GradientSource gradient_source_;
  bool full_model_check_ = true;
};

}  // namespace pruw
