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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pruw/coded_storage.h"
#include "pruw/database_node.h"
#include "pruw/finite_field.h"
#include "pruw/params.h"
#include "pruw/permutations.h"
#include "pruw/random.h"

namespace pruw {

// The Pr subpackets a user writes in one round, with their ell updates each.
struct SparseSelection {
  std::vector<RealIndex> pairs;
  std::vector<std::vector<FieldElement>> deltas;
};

// Global subpacket s (one-based) <-> (subpacket within segment, segment).
RealIndex RealIndexOf(size_t global_subpacket, const SystemParams& params);
size_t GlobalSubpacket(RealIndex at, const SystemParams& params);

// Indices of the P r largest scores, ties to the smaller global index.
// Returned in ascending global order.
std::vector<RealIndex> TopRSelect(std::span<const double> scores,
                                  const SystemParams& params);

// U = sum_{k=1}^{ell} alpha^-k delta_k + z.
FieldElement CombineUpdate(const PrimeField& field,
                           std::span<const FieldElement> delta,
                           FieldElement alpha, FieldElement z);

// result[n] is what database n (zero-based) receives. One fresh pad z per
// selected subpacket, shared across databases.
std::vector<std::vector<WriteTuple>> BuildWriteTuples(
    const SparseSelection& selection, const PermutationSet& perms,
    const SystemParams& params, RandomStream& rng);

// answers[k][n]: database n's answer for permuted_pairs[k].
std::vector<std::pair<RealIndex, SubpacketPlain>> DecodeDownlink(
    std::span<const PermutedIndex> permuted_pairs,
    std::span<const std::vector<FieldElement>> answers,
    const PermutationSet& perms, const SystemParams& params);

enum class ScoreDistribution { kUniform, kHeavyTailed };

std::string ToString(ScoreDistribution d);
ScoreDistribution ParseScoreDistribution(const std::string& text);

// Stand-in for local training: real-valued pseudo-gradients, P x ell.
using PseudoGradients = std::vector<std::vector<double>>;

PseudoGradients SamplePseudoGradients(const SystemParams& params,
                                      ScoreDistribution dist,
                                      RandomStream& rng);

// Sum of magnitudes per subpacket.
std::vector<double> SubpacketScores(const PseudoGradients& grads);

// round(g * scale) embedded symmetrically in F_q.
FieldElement Quantize(const PrimeField& field, double value, double scale);
double Dequantize(const PrimeField& field, FieldElement value, double scale);

// Top-r selection plus quantized deltas for the chosen subpackets.
SparseSelection SelectSparseUpdates(const PseudoGradients& grads,
                                    const SystemParams& params,
                                    double quantization_scale);

}  // namespace pruw
