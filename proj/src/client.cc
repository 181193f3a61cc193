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

#include "pruw/client.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "pruw/errors.h"

namespace pruw {
namespace {

// Pareto tail index of the heavy-tailed generator.
constexpr double kTailIndex = 1.5;
// Magnitude ceiling so quantized values stay far below q/2 for q = 2^61-1.
constexpr double kMaxMagnitude = 1e6;

}  // namespace

RealIndex RealIndexOf(size_t global_subpacket, const SystemParams& params) {
  if (global_subpacket == 0 || global_subpacket > params.num_subpackets) {
    throw IndexError("subpacket " + std::to_string(global_subpacket) +
                     " outside [1, P]");
  }
  const size_t m = params.segment_size();
  return {(global_subpacket - 1) % m + 1, (global_subpacket - 1) / m + 1};
}

size_t GlobalSubpacket(RealIndex at, const SystemParams& params) {
  const size_t m = params.segment_size();
  if (at.subpacket == 0 || at.subpacket > m || at.segment == 0 ||
      at.segment > params.num_segments) {
    throw IndexError("real position out of range");
  }
  return (at.segment - 1) * m + at.subpacket;
}

std::vector<RealIndex> TopRSelect(std::span<const double> scores,
                                  const SystemParams& params) {
  if (scores.size() != params.num_subpackets) {
    throw DimensionError("need one score per subpacket");
  }
  std::vector<size_t> order(scores.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return scores[a] > scores[b];
  });
  order.resize(params.uplink_count());
  std::sort(order.begin(), order.end());
  std::vector<RealIndex> out;
  out.reserve(order.size());
  for (size_t s : order) out.push_back(RealIndexOf(s + 1, params));
  return out;
}

FieldElement CombineUpdate(const PrimeField& field,
                           std::span<const FieldElement> delta,
                           FieldElement alpha, FieldElement z) {
  if (alpha.value == 0) throw ConfigError("evaluation point must be nonzero");
  const FieldElement alpha_inv = field.inv(alpha);
  FieldElement acc = z;
  FieldElement p = alpha_inv;
  for (FieldElement d : delta) {
    field.mul_add(acc, d, p);
    p = field.mul(p, alpha_inv);
  }
  return acc;
}

std::vector<std::vector<WriteTuple>> BuildWriteTuples(
    const SparseSelection& selection, const PermutationSet& perms,
    const SystemParams& params, RandomStream& rng) {
  if (selection.pairs.size() != selection.deltas.size()) {
    throw DimensionError("selection needs one delta vector per pair");
  }
  std::set<RealIndex> distinct(selection.pairs.begin(), selection.pairs.end());
  if (distinct.size() != selection.pairs.size()) {
    throw ProtocolError("sparse selection repeats a subpacket");
  }
  std::vector<std::vector<WriteTuple>> out(params.num_databases);
  for (size_t k = 0; k < selection.pairs.size(); ++k) {
    if (selection.deltas[k].size() != params.subpacket_size) {
      throw DimensionError("each delta must hold ell values");
    }
    const PermutedIndex at =
        RealToPermuted(selection.pairs[k], perms, params.scheme);
    const FieldElement z = rng.uniform(params.field);
    for (size_t n = 0; n < params.num_databases; ++n) {
      out[n].push_back({CombineUpdate(params.field, selection.deltas[k],
                                      params.alphas[n], z),
                        at});
    }
  }
  return out;
}

std::vector<std::pair<RealIndex, SubpacketPlain>> DecodeDownlink(
    std::span<const PermutedIndex> permuted_pairs,
    std::span<const std::vector<FieldElement>> answers,
    const PermutationSet& perms, const SystemParams& params) {
  if (answers.size() != permuted_pairs.size()) {
    throw DimensionError("need one answer set per downlink pair");
  }
  std::vector<std::pair<RealIndex, SubpacketPlain>> out;
  out.reserve(permuted_pairs.size());
  for (size_t k = 0; k < permuted_pairs.size(); ++k) {
    out.emplace_back(PermutedToReal(permuted_pairs[k], perms, params.scheme),
                     DecodeReadAnswers(answers[k], params));
  }
  return out;
}

std::string ToString(ScoreDistribution d) {
  return d == ScoreDistribution::kUniform ? "uniform" : "heavy_tailed";
}

ScoreDistribution ParseScoreDistribution(const std::string& text) {
  if (text == "uniform") return ScoreDistribution::kUniform;
  if (text == "heavy_tailed") return ScoreDistribution::kHeavyTailed;
  throw ConfigError("unknown score_distribution '" + text +
                    "', expected uniform or heavy_tailed");
}

PseudoGradients SamplePseudoGradients(const SystemParams& params,
                                      ScoreDistribution dist,
                                      RandomStream& rng) {
  PseudoGradients grads(params.num_subpackets,
                        std::vector<double>(params.subpacket_size));
  for (auto& sub : grads) {
    for (double& g : sub) {
      const double sign = (rng.next() & 1) ? 1.0 : -1.0;
      double magnitude;
      if (dist == ScoreDistribution::kUniform) {
        magnitude = rng.unit();
      } else {
        // Pareto(1, kTailIndex) shifted to start at zero.
        const double u = 1.0 - rng.unit();  // (0, 1]
        magnitude = std::pow(u, -1.0 / kTailIndex) - 1.0;
      }
      g = sign * std::min(magnitude, kMaxMagnitude) * 1e-2;
    }
  }
  return grads;
}

std::vector<double> SubpacketScores(const PseudoGradients& grads) {
  std::vector<double> scores;
  scores.reserve(grads.size());
  for (const auto& sub : grads) {
    double s = 0;
    for (double g : sub) s += std::abs(g);
    scores.push_back(s);
  }
  return scores;
}

FieldElement Quantize(const PrimeField& field, double value, double scale) {
  const double scaled = std::round(value * scale);
  // Values beyond q/2 wrap around; fidelity is the caller's choice of q.
  if (!(std::abs(scaled) < 0x1.0p62)) {
    throw ConfigError("quantized value does not fit in 63 bits");
  }
  return field.from_signed(static_cast<int64_t>(scaled));
}

double Dequantize(const PrimeField& field, FieldElement value, double scale) {
  return static_cast<double>(field.to_signed(value)) / scale;
}

SparseSelection SelectSparseUpdates(const PseudoGradients& grads,
                                    const SystemParams& params,
                                    double quantization_scale) {
  SparseSelection sel;
  sel.pairs = TopRSelect(SubpacketScores(grads), params);
  for (const auto& at : sel.pairs) {
    const auto& g = grads[GlobalSubpacket(at, params) - 1];
    std::vector<FieldElement> delta;
    delta.reserve(g.size());
    for (double v : g) delta.push_back(Quantize(params.field, v, quantization_scale));
    sel.deltas.push_back(std::move(delta));
  }
  return sel;
}

}  // namespace pruw
