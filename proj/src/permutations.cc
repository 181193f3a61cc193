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

#include "pruw/permutations.h"

#include <numeric>
#include <string>
#include <utility>

#include "pruw/errors.h"

namespace pruw {
namespace {

FieldMatrix RandomMatrix(const PrimeField& field, size_t rows, size_t cols,
                         RandomStream& rng) {
  FieldMatrix m(rows, cols);
  for (auto& e : m.data()) e = rng.uniform(field);
  return m;
}

nlohmann::json MatrixToJson(const FieldMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).value);
    rows.push_back(std::move(row));
  }
  return rows;
}

FieldMatrix MatrixFromJson(const nlohmann::json& j, const PrimeField& field) {
  const size_t rows = j.size();
  const size_t cols = rows == 0 ? 0 : j.at(0).size();
  FieldMatrix m(rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    if (j.at(r).size() != cols) throw ConfigError("ragged matrix in JSON");
    for (size_t c = 0; c < cols; ++c) {
      auto v = j.at(r).at(c).get<uint64_t>();
      if (v >= field.modulus()) throw ConfigError("unreduced matrix entry");
      m.at(r, c) = FieldElement(v);
    }
  }
  return m;
}

void CheckIndex(size_t value, size_t bound, const char* what) {
  if (value == 0 || value > bound) {
    throw IndexError(std::string(what) + " index " + std::to_string(value) +
                     " outside [1, " + std::to_string(bound) + "]");
  }
}

}  // namespace

Permutation::Permutation(std::vector<size_t> image)
    : image_(std::move(image)), inverse_(image_.size(), 0) {
  const size_t m = image_.size();
  for (size_t k = 0; k < m; ++k) {
    size_t v = image_[k];
    if (v == 0 || v > m || inverse_[v - 1] != 0) {
      throw ConfigError("not a permutation of {1.." + std::to_string(m) + "}");
    }
    inverse_[v - 1] = k + 1;
  }
}

Permutation Permutation::Identity(size_t m) {
  std::vector<size_t> image(m);
  std::iota(image.begin(), image.end(), size_t{1});
  return Permutation(std::move(image));
}

size_t Permutation::operator()(size_t k) const {
  CheckIndex(k, image_.size(), "permutation");
  return image_[k - 1];
}

size_t Permutation::inverse(size_t k) const {
  CheckIndex(k, inverse_.size(), "permutation");
  return inverse_[k - 1];
}

void ValidatePermutationSet(const PermutationSet& perms,
                            const SystemParams& params) {
  if (perms.within.size() != params.num_segments) {
    throw ConfigError("expected B=" + std::to_string(params.num_segments) +
                      " within-segment permutations, got " +
                      std::to_string(perms.within.size()));
  }
  for (const auto& p : perms.within) {
    if (p.size() != params.segment_size()) {
      throw ConfigError("within-segment permutations must act on P/B=" +
                        std::to_string(params.segment_size()) + " elements");
    }
  }
  const bool wants_inter = params.scheme == Scheme::kCase2;
  if (perms.inter.has_value() != wants_inter) {
    throw ConfigError(wants_inter
                          ? "case2 requires an inter-segment permutation"
                          : "case1 takes no inter-segment permutation");
  }
  if (perms.inter && perms.inter->size() != params.num_segments) {
    throw ConfigError("inter-segment permutation must act on B=" +
                      std::to_string(params.num_segments) + " elements");
  }
}

Permutation SamplePermutation(size_t m, RandomStream& rng) {
  std::vector<size_t> image(m);
  std::iota(image.begin(), image.end(), size_t{1});
  for (size_t i = m; i > 1; --i) {
    std::swap(image[i - 1], image[rng.below(i)]);
  }
  return Permutation(std::move(image));
}

PermutationSet SamplePermutationSet(const SystemParams& params,
                                    RandomStream& rng) {
  PermutationSet perms;
  for (size_t j = 0; j < params.num_segments; ++j) {
    perms.within.push_back(SamplePermutation(params.segment_size(), rng));
  }
  if (params.scheme == Scheme::kCase2) {
    perms.inter = SamplePermutation(params.num_segments, rng);
  }
  return perms;
}

size_t ReverserSet::symbol_count() const {
  size_t n = 0;
  for (const auto& m : within) n += m.size();
  if (inter) n += inter->size();
  return n;
}

FieldMatrix PermutationMatrix(const Permutation& perm) {
  FieldMatrix m(perm.size(), perm.size());
  for (size_t k = 1; k <= perm.size(); ++k) {
    m.at(perm(k) - 1, k - 1) = FieldElement(1);
  }
  return m;
}

FieldMatrix BuildReverser(const PrimeField& field, const Permutation& perm,
                          FieldElement alpha, size_t ell,
                          const FieldMatrix& noise) {
  if (noise.rows() != perm.size() || noise.cols() != perm.size()) {
    throw DimensionError("reverser noise must be square of the permutation size");
  }
  const FieldElement scale = field.pow(alpha, static_cast<int64_t>(ell));
  FieldMatrix r = PermutationMatrix(perm);
  for (size_t i = 0; i < r.size(); ++i) {
    field.mul_add(r.data()[i], scale, noise.data()[i]);
  }
  return r;
}

ReverserNoise SampleReverserNoise(const SystemParams& params,
                                  RandomStream& rng) {
  ReverserNoise noise;
  const size_t m = params.segment_size();
  for (size_t j = 0; j < params.num_segments; ++j) {
    noise.within.push_back(RandomMatrix(params.field, m, m, rng));
  }
  if (params.scheme == Scheme::kCase2) {
    noise.inter = RandomMatrix(params.field, params.num_segments,
                               params.num_segments, rng);
  }
  return noise;
}

ReverserNoise ZeroReverserNoise(const SystemParams& params) {
  ReverserNoise noise;
  const size_t m = params.segment_size();
  noise.within.assign(params.num_segments, FieldMatrix(m, m));
  if (params.scheme == Scheme::kCase2) {
    noise.inter = FieldMatrix(params.num_segments, params.num_segments);
  }
  return noise;
}

ReverserSet BuildReverserSet(const SystemParams& params,
                             const PermutationSet& perms,
                             const ReverserNoise& noise, size_t database) {
  ValidatePermutationSet(perms, params);
  if (database >= params.num_databases) {
    throw IndexError("database index out of range");
  }
  const FieldElement alpha = params.alphas[database];
  ReverserSet rev;
  for (size_t j = 0; j < params.num_segments; ++j) {
    rev.within.push_back(BuildReverser(params.field, perms.within[j], alpha,
                                       params.subpacket_size,
                                       noise.within.at(j)));
  }
  if (perms.inter) {
    if (!noise.inter) throw ConfigError("missing inter-segment reverser noise");
    rev.inter = BuildReverser(params.field, *perms.inter, alpha,
                              params.subpacket_size, *noise.inter);
  }
  return rev;
}

PermutedIndex RealToPermuted(RealIndex real, const PermutationSet& perms,
                             Scheme scheme) {
  CheckIndex(real.segment, perms.within.size(), "segment");
  const Permutation& within = perms.within[real.segment - 1];
  CheckIndex(real.subpacket, within.size(), "subpacket");
  PermutedIndex out;
  out.subpacket = within.inverse(real.subpacket);
  if (scheme == Scheme::kCase2) {
    if (!perms.inter) throw ConfigError("case2 requires an inter permutation");
    out.segment = perms.inter->inverse(real.segment);
  } else {
    out.segment = real.segment;
  }
  return out;
}

RealIndex PermutedToReal(PermutedIndex permuted, const PermutationSet& perms,
                         Scheme scheme) {
  CheckIndex(permuted.segment, perms.within.size(), "segment");
  RealIndex out;
  if (scheme == Scheme::kCase2) {
    if (!perms.inter) throw ConfigError("case2 requires an inter permutation");
    out.segment = (*perms.inter)(permuted.segment);
  } else {
    out.segment = permuted.segment;
  }
  const Permutation& within = perms.within[out.segment - 1];
  CheckIndex(permuted.subpacket, within.size(), "subpacket");
  out.subpacket = within(permuted.subpacket);
  return out;
}

std::vector<FieldElement> Case2ReverserColumn(const PrimeField& field,
                                              const ReverserSet& rev,
                                              size_t column) {
  if (!rev.inter) throw ConfigError("case2 reverser set lacks Rhat");
  const size_t b = rev.within.size();
  const size_t m = b == 0 ? 0 : rev.within[0].rows();
  CheckIndex(column, b * m, "reverser column");
  const size_t j = (column - 1) / m;  // zero-based segment of the column
  const size_t i = (column - 1) % m;  // zero-based position inside it
  // Column (j, i) of Rhat kron I has Rhat(k, j) at row block k, offset i; the
  // block-diagonal factor then maps block k through R^[k](:, i).
  std::vector<FieldElement> out(b * m);
  for (size_t k = 0; k < b; ++k) {
    const FieldElement weight = rev.inter->at(k, j);
    if (weight.value == 0) continue;
    const FieldMatrix& block = rev.within[k];
    for (size_t row = 0; row < m; ++row) {
      out[k * m + row] = field.mul(weight, block.at(row, i));
    }
  }
  return out;
}

std::vector<FieldElement> Case2ApplyReverser(const PrimeField& field,
                                             const ReverserSet& rev,
                                             std::span<const FieldElement> y) {
  if (!rev.inter) throw ConfigError("case2 reverser set lacks Rhat");
  const size_t b = rev.within.size();
  const size_t m = b == 0 ? 0 : rev.within[0].rows();
  if (y.size() != b * m) {
    throw DimensionError("update vector must have P=" + std::to_string(b * m) +
                         " entries, got " + std::to_string(y.size()));
  }
  // Stage 1: t = (Rhat kron I) y, block k = sum_j Rhat(k, j) y_j.
  std::vector<FieldElement> t(b * m);
  for (size_t k = 0; k < b; ++k) {
    for (size_t j = 0; j < b; ++j) {
      const FieldElement w = rev.inter->at(k, j);
      if (w.value == 0) continue;
      for (size_t i = 0; i < m; ++i) field.mul_add(t[k * m + i], w, y[j * m + i]);
    }
  }
  // Stage 2: each block through its within-segment reverser.
  std::vector<FieldElement> out(b * m);
  for (size_t k = 0; k < b; ++k) {
    auto block_in = std::span<const FieldElement>(t).subspan(k * m, m);
    auto block_out = Multiply(field, rev.within[k], block_in);
    std::copy(block_out.begin(), block_out.end(), out.begin() + k * m);
  }
  return out;
}

FieldMatrix MaterializeCase2Reverser(const PrimeField& field,
                                     const ReverserSet& rev) {
  if (!rev.inter) throw ConfigError("case2 reverser set lacks Rhat");
  const size_t b = rev.within.size();
  const size_t m = b == 0 ? 0 : rev.within[0].rows();
  FieldMatrix block_diag(b * m, b * m);
  FieldMatrix kron(b * m, b * m);
  for (size_t k = 0; k < b; ++k) {
    for (size_t r = 0; r < m; ++r) {
      for (size_t c = 0; c < m; ++c) {
        block_diag.at(k * m + r, k * m + c) = rev.within[k].at(r, c);
      }
    }
    for (size_t j = 0; j < b; ++j) {
      for (size_t i = 0; i < m; ++i) {
        kron.at(k * m + i, j * m + i) = rev.inter->at(k, j);
      }
    }
  }
  return Multiply(field, block_diag, kron);
}

nlohmann::json PermutationSetToJson(const PermutationSet& perms) {
  nlohmann::json within = nlohmann::json::array();
  for (const auto& p : perms.within) within.push_back(p.image());
  nlohmann::json j = {{"within", within}};
  j["inter"] = perms.inter ? nlohmann::json(perms.inter->image())
                           : nlohmann::json(nullptr);
  return j;
}

PermutationSet PermutationSetFromJson(const nlohmann::json& j) {
  for (const auto& [key, _] : j.items()) {
    if (key != "within" && key != "inter") {
      throw ConfigError("unknown permutation field '" + key + "'");
    }
  }
  PermutationSet perms;
  for (const auto& p : j.at("within")) {
    perms.within.emplace_back(p.get<std::vector<size_t>>());
  }
  if (j.contains("inter") && !j.at("inter").is_null()) {
    perms.inter = Permutation(j.at("inter").get<std::vector<size_t>>());
  }
  return perms;
}

nlohmann::json ReverserSetToJson(const ReverserSet& rev,
                                 const PrimeField& field) {
  nlohmann::json within = nlohmann::json::array();
  for (const auto& m : rev.within) within.push_back(MatrixToJson(m));
  nlohmann::json j = {{"q", field.modulus()}, {"within", within}};
  j["inter"] = rev.inter ? MatrixToJson(*rev.inter) : nlohmann::json(nullptr);
  return j;
}

ReverserSet ReverserSetFromJson(const nlohmann::json& j,
                                const PrimeField& field) {
  if (j.at("q").get<uint64_t>() != field.modulus()) {
    throw ConfigError("reverser set was written for a different q");
  }
  ReverserSet rev;
  for (const auto& m : j.at("within")) {
    rev.within.push_back(MatrixFromJson(m, field));
  }
  if (j.contains("inter") && !j.at("inter").is_null()) {
    rev.inter = MatrixFromJson(j.at("inter"), field);
  }
  return rev;
}

}  // namespace pruw
