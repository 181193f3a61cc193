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

#include "pruw/coded_storage.h"

#include <string>

#include "pruw/errors.h"

namespace pruw {
namespace {

void PutU64(std::string& out, uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>(v >> (8 * i)));
}

uint64_t GetU64(std::string_view in, size_t offset) {
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    v |= static_cast<uint64_t>(static_cast<unsigned char>(in[offset + i]))
         << (8 * i);
  }
  return v;
}

}  // namespace

std::span<const FieldElement> StorageState::segment(
    size_t segment_index, size_t segment_size) const {
  if (segment_index == 0 || segment_index * segment_size > symbols.size()) {
    throw IndexError("segment index out of range: " +
                     std::to_string(segment_index));
  }
  return std::span(symbols).subspan((segment_index - 1) * segment_size,
                                    segment_size);
}

std::span<FieldElement> StorageState::segment(size_t segment_index,
                                              size_t segment_size) {
  if (segment_index == 0 || segment_index * segment_size > symbols.size()) {
    throw IndexError("segment index out of range: " +
                     std::to_string(segment_index));
  }
  return std::span(symbols).subspan((segment_index - 1) * segment_size,
                                    segment_size);
}

FieldElement EncodeSubpacket(const PrimeField& field,
                             std::span<const FieldElement> plain,
                             std::span<const FieldElement> noise,
                             FieldElement alpha, int64_t noise_degree) {
  if (noise_degree < 0 ||
      noise.size() != static_cast<size_t>(noise_degree) + 1) {
    throw DimensionError("noise vector must hold x+1 = " +
                         std::to_string(noise_degree + 1) + " symbols, got " +
                         std::to_string(noise.size()));
  }
  if (alpha.value == 0) throw ConfigError("evaluation point must be nonzero");
  FieldElement acc;
  const FieldElement alpha_inv = field.inv(alpha);
  FieldElement p = alpha_inv;
  for (FieldElement w : plain) {
    field.mul_add(acc, w, p);
    p = field.mul(p, alpha_inv);
  }
  p = field.one();
  for (FieldElement z : noise) {
    field.mul_add(acc, z, p);
    p = field.mul(p, alpha);
  }
  return acc;
}

std::vector<StorageState> InitStorage(std::span<const SubpacketPlain> model,
                                      const SystemParams& params,
                                      RandomStream& rng) {
  if (model.size() != params.num_subpackets) {
    throw DimensionError("model must hold P=" +
                         std::to_string(params.num_subpackets) +
                         " subpackets, got " + std::to_string(model.size()));
  }
  const int64_t x = params.storage_noise_degree();
  std::vector<StorageState> out(params.num_databases);
  for (auto& s : out) s.symbols.resize(params.num_subpackets);
  std::vector<FieldElement> noise(static_cast<size_t>(x) + 1);
  for (size_t s = 0; s < model.size(); ++s) {
    if (model[s].size() != params.subpacket_size) {
      throw DimensionError("subpacket " + std::to_string(s + 1) +
                           " must hold ell=" +
                           std::to_string(params.subpacket_size) +
                           " parameters");
    }
    for (auto& z : noise) z = rng.uniform(params.field);
    for (size_t n = 0; n < params.num_databases; ++n) {
      out[n].symbols[s] =
          EncodeSubpacket(params.field, model[s], noise, params.alphas[n], x);
    }
  }
  return out;
}

SubpacketPlain DecodeReadAnswers(std::span<const FieldElement> answers,
                                 std::span<const FieldElement> alphas,
                                 const SystemParams& params) {
  const auto ell = static_cast<int64_t>(params.subpacket_size);
  std::vector<FieldElement> coeffs = SolvePowerSystem(
      params.field, answers, alphas, -ell, params.answer_degree());
  // coeffs[k] multiplies alpha^(k - ell); W_i sits at exponent -i.
  SubpacketPlain plain(params.subpacket_size);
  for (size_t i = 1; i <= params.subpacket_size; ++i) {
    plain[i - 1] = coeffs[params.subpacket_size - i];
  }
  return plain;
}

SubpacketPlain DecodeReadAnswers(std::span<const FieldElement> answers,
                                 const SystemParams& params) {
  if (answers.size() < params.num_databases) {
    throw UnderdeterminedError(
        "decoding needs one answer from each of the N=" +
        std::to_string(params.num_databases) + " databases, got " +
        std::to_string(answers.size()));
  }
  return DecodeReadAnswers(answers, params.alphas.values(), params);
}

std::string SerializeStorageBinary(const StorageState& state,
                                   const PrimeField& field) {
  std::string out;
  out.reserve(8 * (state.symbols.size() + 1));
  PutU64(out, field.modulus());
  for (FieldElement s : state.symbols) PutU64(out, s.value);
  return out;
}

StorageState DeserializeStorageBinary(std::string_view bytes,
                                      const PrimeField& field) {
  if (bytes.size() < 8 || bytes.size() % 8 != 0) {
    throw DimensionError("storage snapshot length must be a multiple of 8");
  }
  if (GetU64(bytes, 0) != field.modulus()) {
    throw ConfigError("storage snapshot was written for a different q");
  }
  StorageState state;
  for (size_t off = 8; off < bytes.size(); off += 8) {
    uint64_t v = GetU64(bytes, off);
    if (v >= field.modulus()) throw ConfigError("unreduced residue in snapshot");
    state.symbols.emplace_back(v);
  }
  return state;
}

nlohmann::json StorageToJson(const StorageState& state,
                             const PrimeField& field) {
  nlohmann::json symbols = nlohmann::json::array();
  for (FieldElement s : state.symbols) symbols.push_back(s.value);
  return {{"q", field.modulus()}, {"symbols", symbols}};
}

StorageState StorageFromJson(const nlohmann::json& j, const PrimeField& field) {
  if (j.at("q").get<uint64_t>() != field.modulus()) {
    throw ConfigError("storage snapshot was written for a different q");
  }
  StorageState state;
  for (const auto& v : j.at("symbols")) {
    auto x = v.get<uint64_t>();
    if (x >= field.modulus()) throw ConfigError("unreduced residue in snapshot");
    state.symbols.emplace_back(x);
  }
  return state;
}

}  // namespace pruw
