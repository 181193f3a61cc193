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

#include "pruw/simulation.h"

#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "pruw/errors.h"

namespace pruw {
namespace {

const std::set<std::string>& ConfigKeys() {
  static const std::set<std::string> keys = {
      "scheme", "N",    "P",    "B",     "r",
      "r_prime", "q",   "alphas", "users_per_round", "rounds",
      "seed",   "score_distribution", "quantization_scale", "permutations"};
  return keys;
}

template <typename T>
T Required(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) {
    throw ConfigError(std::string("config is missing required field '") + key +
                      "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(std::string("config field '") + key +
                      "' has the wrong type");
  }
}

Rational RateFromJson(const nlohmann::json& v, size_t p, const char* key) {
  if (v.is_string()) return ParseRational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<int64_t>());
  if (v.is_number_float()) {
    const double scaled = v.get<double>() * static_cast<double>(p);
    const double k = std::round(scaled);
    if (std::abs(scaled - k) > 1e-9) {
      throw ConfigError(std::string(key) + " * P must be an integer");
    }
    return Rational(static_cast<int64_t>(k), static_cast<int64_t>(p));
  }
  throw ConfigError(std::string("config field '") + key +
                    "' must be a number or an \"a/b\" string");
}

nlohmann::json Pairs(const std::vector<PermutedIndex>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : v) out.push_back({p.subpacket, p.segment});
  return out;
}

nlohmann::json Pairs(const std::vector<RealIndex>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : v) out.push_back({p.subpacket, p.segment});
  return out;
}

std::string Describe(RealIndex at) {
  return "(" + std::to_string(at.subpacket) + ", " + std::to_string(at.segment) +
         ")";
}

}  // namespace

SimulationConfig ParseSimulationConfig(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!ConfigKeys().contains(key)) {
      throw ConfigError("unknown config field '" + key + "'");
    }
  }
  const Scheme scheme = j.contains("scheme") && j.at("scheme").is_number()
                            ? ParseScheme(std::to_string(j.at("scheme").get<int>()))
                            : ParseScheme(Required<std::string>(j, "scheme"));
  const auto n = Required<size_t>(j, "N");
  const auto p = Required<size_t>(j, "P");
  const auto b = Required<size_t>(j, "B");
  if (!j.contains("r") || !j.contains("r_prime")) {
    throw ConfigError("config needs both 'r' and 'r_prime'");
  }
  const Rational r = RateFromJson(j.at("r"), p, "r");
  const Rational r_prime = RateFromJson(j.at("r_prime"), p, "r_prime");
  const uint64_t q = j.contains("q") ? Required<uint64_t>(j, "q") : kMersenne61;
  std::vector<uint64_t> alphas;
  if (j.contains("alphas")) alphas = Required<std::vector<uint64_t>>(j, "alphas");

  SimulationConfig c;
  c.params = MakeParams(scheme, n, p, b, r, r_prime, q, std::move(alphas));
  c.users_per_round = Required<size_t>(j, "users_per_round");
  c.rounds = Required<size_t>(j, "rounds");
  c.seed = j.contains("seed") ? Required<uint64_t>(j, "seed") : 0;
  if (c.users_per_round < 1) throw ConfigError("users_per_round must be >= 1");
  if (c.rounds < 1) throw ConfigError("rounds must be >= 1");
  if (j.contains("score_distribution")) {
    c.score_distribution = ParseScoreDistribution(
        Required<std::string>(j, "score_distribution"));
  }
  if (j.contains("quantization_scale")) {
    c.quantization_scale = Required<double>(j, "quantization_scale");
    if (!(c.quantization_scale > 0)) {
      throw ConfigError("quantization_scale must be positive");
    }
  }
  if (j.contains("permutations")) {
    try {
      c.permutations = PermutationSetFromJson(j.at("permutations"));
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("malformed permutations: ") + e.what());
    }
    ValidatePermutationSet(*c.permutations, c.params);
  }
  return c;
}

nlohmann::json SimulationConfigToJson(const SimulationConfig& config) {
  const SystemParams& p = config.params;
  nlohmann::json alphas = nlohmann::json::array();
  for (FieldElement a : p.alphas.values()) alphas.push_back(a.value);
  nlohmann::json j = {
      {"scheme", ToString(p.scheme)},
      {"N", p.num_databases},
      {"P", p.num_subpackets},
      {"B", p.num_segments},
      {"r", ToString(p.uplink_rate)},
      {"r_prime", ToString(p.downlink_rate)},
      {"q", p.field.modulus()},
      {"alphas", alphas},
      {"users_per_round", config.users_per_round},
      {"rounds", config.rounds},
      {"seed", config.seed},
      {"score_distribution", ToString(config.score_distribution)},
      {"quantization_scale", config.quantization_scale},
  };
  if (config.permutations) {
    j["permutations"] = PermutationSetToJson(*config.permutations);
  }
  return j;
}

Provisioning CoordinatorInit(const SimulationConfig& config) {
  const SystemParams& params = config.params;
  RandomStream coord = RandomStream::Derive(config.seed, "coordinator");
  Provisioning out;
  if (config.permutations) {
    ValidatePermutationSet(*config.permutations, params);
    out.permutations = *config.permutations;
  } else {
    out.permutations = SamplePermutationSet(params, coord);
  }
  const ReverserNoise noise = SampleReverserNoise(params, coord);
  for (size_t n = 0; n < params.num_databases; ++n) {
    out.reversers.push_back(
        BuildReverserSet(params, out.permutations, noise, n));
  }

  RandomStream model_rng = RandomStream::Derive(config.seed, "model");
  out.shadow.assign(params.num_subpackets,
                    SubpacketPlain(params.subpacket_size));
  for (auto& sub : out.shadow) {
    for (auto& w : sub) {
      w = Quantize(params.field, 2.0 * model_rng.unit() - 1.0,
                   config.quantization_scale);
    }
  }
  RandomStream storage_rng = RandomStream::Derive(config.seed, "storage-noise");
  out.storage = InitStorage(out.shadow, params, storage_rng);
  return out;
}

nlohmann::json RoundReportToJson(const RoundReport& report) {
  nlohmann::json visible_writes = nlohmann::json::array();
  nlohmann::json real_writes = nlohmann::json::array();
  for (const auto& w : report.writes) {
    visible_writes.push_back({{"user", w.user}, {"tuples", Pairs(w.permuted_pairs)}});
    nlohmann::json deltas = nlohmann::json::array();
    for (const auto& d : w.deltas) {
      nlohmann::json row = nlohmann::json::array();
      for (FieldElement v : d) row.push_back(v.value);
      deltas.push_back(std::move(row));
    }
    real_writes.push_back(
        {{"user", w.user}, {"pairs", Pairs(w.real_pairs)}, {"deltas", deltas}});
  }
  nlohmann::json hist = nlohmann::json::array();
  for (size_t j = 1; j <= report.histogram.num_segments(); ++j) {
    nlohmann::json seg = nlohmann::json::array();
    for (size_t i = 1; i <= report.histogram.segment_size(); ++i) {
      seg.push_back(report.histogram.count({i, j}));
    }
    hist.push_back(std::move(seg));
  }
  return {
      {"round", report.round},
      {"database_visible",
       {{"writes", visible_writes},
        {"downlink", Pairs(report.downlink_permuted)},
        {"histogram", hist}}},
      {"real_domain",
       {{"writes", real_writes}, {"downlink", Pairs(report.downlink_real)}}},
      {"costs", CostReportToJson(report.costs)},
      {"oracle",
       {{"status", "ok"},
        {"read_checks", report.read_checks},
        {"model_checks", report.model_checks}}},
  };
}

Simulation::Simulation(SimulationConfig config) : config_(std::move(config)) {
  Provisioning prov = CoordinatorInit(config_);
  permutations_ = std::move(prov.permutations);
  shadow_ = std::move(prov.shadow);
  for (size_t n = 0; n < config_.params.num_databases; ++n) {
    nodes_.emplace_back(config_.params, n, std::move(prov.storage[n]),
                        std::move(prov.reversers[n]));
  }
  // prov goes out of scope here: the coordinator has left.
}

SubpacketPlain Simulation::ReadSubpacket(RealIndex at) const {
  const PermutedIndex permuted =
      RealToPermuted(at, permutations_, config_.params.scheme);
  std::vector<FieldElement> answers;
  answers.reserve(nodes_.size());
  for (const auto& node : nodes_) answers.push_back(node.Answer(permuted));
  return DecodeReadAnswers(answers, config_.params);
}

void Simulation::VerifyModel() const {
  const SystemParams& params = config_.params;
  for (size_t s = 1; s <= params.num_subpackets; ++s) {
    const RealIndex at = RealIndexOf(s, params);
    if (ReadSubpacket(at) != shadow_[s - 1]) {
      throw OracleViolation("round " + std::to_string(round_) + ": subpacket " +
                            Describe(at) +
                            " does not decode to the shadow model");
    }
  }
}

RoundReport Simulation::RunRound() {
  const SystemParams& params = config_.params;
  const PrimeField& field = params.field;
  ++round_;
  for (auto& node : nodes_) node.BeginRound(round_);

  RoundReport report;
  report.round = round_;

  // Write phase.
  for (size_t u = 1; u <= config_.users_per_round; ++u) {
    PseudoGradients grads;
    if (gradient_source_) {
      grads = gradient_source_(round_, u);
    } else {
      RandomStream g =
          RandomStream::Derive(config_.seed, "user-gradients", {round_, u});
      grads = SamplePseudoGradients(params, config_.score_distribution, g);
    }
    SparseSelection sel =
        SelectSparseUpdates(grads, params, config_.quantization_scale);
    RandomStream pads =
        RandomStream::Derive(config_.seed, "write-noise", {round_, u});
    const auto tuples = BuildWriteTuples(sel, permutations_, params, pads);
    for (size_t n = 0; n < nodes_.size(); ++n) nodes_[n].ApplyWrite(tuples[n]);

    UserWrite w;
    w.user = u;
    w.real_pairs = sel.pairs;
    for (const auto& t : tuples.front()) w.permuted_pairs.push_back(t.position);
    for (size_t k = 0; k < sel.pairs.size(); ++k) {
      auto& target = shadow_[GlobalSubpacket(sel.pairs[k], params) - 1];
      for (size_t i = 0; i < target.size(); ++i) {
        target[i] = field.add(target[i], sel.deltas[k][i]);
      }
    }
    w.deltas = std::move(sel.deltas);
    report.writes.push_back(std::move(w));
  }

  // Downlink selection: every node derives it from its own histogram.
  const auto downlink = SelectDownlink(nodes_.front().histogram(), params);
  for (const auto& node : nodes_) {
    if (SelectDownlink(node.histogram(), params) != downlink) {
      throw OracleViolation("databases disagree on the downlink set in round " +
                            std::to_string(round_));
    }
  }
  report.downlink_permuted = downlink;
  for (const auto& p : downlink) {
    report.downlink_real.push_back(PermutedToReal(p, permutations_, params.scheme));
  }

  // Read phase.
  std::vector<std::vector<FieldElement>> answers(downlink.size());
  for (size_t k = 0; k < downlink.size(); ++k) {
    for (const auto& node : nodes_) answers[k].push_back(node.Answer(downlink[k]));
  }
  for (size_t u = 1; u <= config_.users_per_round; ++u) {
    for (auto& node : nodes_) node.RecordDownlink(downlink);
    const auto decoded = DecodeDownlink(downlink, answers, permutations_, params);
    for (const auto& [at, plain] : decoded) {
      if (plain != shadow_[GlobalSubpacket(at, params) - 1]) {
        throw OracleViolation("round " + std::to_string(round_) + ", user " +
                              std::to_string(u) + ": downlink subpacket " +
                              Describe(at) + " decoded incorrectly");
      }
      ++report.read_checks;
    }
  }

  if (full_model_check_) {
    VerifyModel();
    report.model_checks = params.num_subpackets;
  }

  report.histogram = nodes_.front().histogram();
  RoundTrace trace;
  trace.round = round_;
  trace.users = config_.users_per_round;
  for (const auto& node : nodes_) trace.rows.push_back(node.trace().back());
  report.costs =
      MeasuredCosts(trace, params, nodes_.front().stored_symbol_count());
  return report;
}

std::vector<RoundReport> Simulation::Run() {
  std::vector<RoundReport> reports;
  for (size_t t = 0; t < config_.rounds; ++t) reports.push_back(RunRound());
  return reports;
}

std::vector<NodeTraceRow> Simulation::trace_rows(size_t database) const {
  const auto rows = nodes_.at(database).trace();
  return {rows.begin(), rows.end()};
}

}  // namespace pruw
