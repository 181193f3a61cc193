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
#include <span>
#include <string>
#include <vector>

#include "nlohmann/json.hpp"

#include "pruw/finite_field.h"
#include "pruw/params.h"
#include "pruw/random.h"

namespace pruw {

// The ell parameters W_1..W_ell of one subpacket.
using SubpacketPlain = std::vector<FieldElement>;

// One coded symbol per subpacket, segment j occupying entries
// [(j-1) P/B, j P/B).
struct StorageState {
  std::vector<FieldElement> symbols;

  std::span<const FieldElement> segment(size_t segment_index,
                                        size_t segment_size) const;
  std::span<FieldElement> segment(size_t segment_index, size_t segment_size);

  friend bool operator==(const StorageState&, const StorageState&) = default;
};

// sum_{i=1}^{ell} alpha^-i W_i + sum_{i=0}^{x} alpha^i Z_i.
// noise must hold x + 1 symbols.
FieldElement EncodeSubpacket(const PrimeField& field,
                             std::span<const FieldElement> plain,
                             std::span<const FieldElement> noise,
                             FieldElement alpha, int64_t noise_degree);

// Encodes the model for every database. Each subpacket gets one noise vector
// Z_{s,0..x}, shared by all databases and evaluated at their own alpha_n.
std::vector<StorageState> InitStorage(std::span<const SubpacketPlain> model,
                                      const SystemParams& params,
                                      RandomStream& rng);

// Recovers W_1..W_ell of one subpacket from one answer per database.
// answers[k] must come from the database whose point is alphas[k]. Passing
// fewer points than N raises UnderdeterminedError.
SubpacketPlain DecodeReadAnswers(std::span<const FieldElement> answers,
                                 std::span<const FieldElement> alphas,
                                 const SystemParams& params);
SubpacketPlain DecodeReadAnswers(std::span<const FieldElement> answers,
                                 const SystemParams& params);

// Flat snapshot of one database: q as u64 little-endian, then the P residues
// as u64 little-endian.
std::string SerializeStorageBinary(const StorageState& state,
                                   const PrimeField& field);
StorageState DeserializeStorageBinary(std::string_view bytes,
                                      const PrimeField& field);

// {"q": ..., "symbols": [...]}
nlohmann::json StorageToJson(const StorageState& state,
                             const PrimeField& field);
StorageState StorageFromJson(const nlohmann::json& j, const PrimeField& field);

}  // namespace pruw
