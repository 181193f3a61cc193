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

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nlohmann/json.hpp"

#include "pruw/finite_field.h"
#include "pruw/params.h"
#include "pruw/random.h"

namespace pruw {

// Bijection of {1..m}. Stored as the image list (p(1), ..., p(m)).
class Permutation {
 public:
  Permutation() = default;
  // Throws ConfigError unless image is a bijection of {1..m}.
  explicit Permutation(std::vector<size_t> image);

  static Permutation Identity(size_t m);

  size_t size() const { return image_.size(); }
  // p(k), one-based.
  size_t operator()(size_t k) const;
  // p^-1(k), one-based.
  size_t inverse(size_t k) const;
  const std::vector<size_t>& image() const { return image_; }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.image_ == b.image_;
  }
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.image_ <=> b.image_;
  }

 private:
  std::vector<size_t> image_;
  std::vector<size_t> inverse_;
};

// Subpacket position as the user knows it (one-based).
struct RealIndex {
  size_t subpacket = 0;
  size_t segment = 0;
  friend auto operator<=>(const RealIndex&, const RealIndex&) = default;
};

// Subpacket position as databases see it (one-based).
struct PermutedIndex {
  size_t subpacket = 0;
  size_t segment = 0;
  friend auto operator<=>(const PermutedIndex&, const PermutedIndex&) = default;
};

// The user-side secret: one permutation per segment, plus the permutation of
// segments in Case2.
struct PermutationSet {
  std::vector<Permutation> within;
  std::optional<Permutation> inter;

  friend bool operator==(const PermutationSet&,
                         const PermutationSet&) = default;
};

// Checks sizes and that inter is present exactly for Case2.
void ValidatePermutationSet(const PermutationSet& perms,
                            const SystemParams& params);

// Uniform bijections via Fisher-Yates.
Permutation SamplePermutation(size_t m, RandomStream& rng);
PermutationSet SamplePermutationSet(const SystemParams& params,
                                    RandomStream& rng);

// Database-side state: the noise-added permutation-reversing matrices.
struct ReverserSet {
  std::vector<FieldMatrix> within;  // B matrices, (P/B) x (P/B)
  std::optional<FieldMatrix> inter;  // B x B, Case2 only

  // Entries held by the database.
  size_t symbol_count() const;

  friend bool operator==(const ReverserSet&, const ReverserSet&) = default;
};

// The 0/1 matrix M with M e_k = e_{p(k)}.
FieldMatrix PermutationMatrix(const Permutation& perm);

// M + alpha^ell * noise.
FieldMatrix BuildReverser(const PrimeField& field, const Permutation& perm,
                          FieldElement alpha, size_t ell,
                          const FieldMatrix& noise);

// Shared pads: Zbar_j for each segment and, in Case2, the inter-segment pad.
struct ReverserNoise {
  std::vector<FieldMatrix> within;
  std::optional<FieldMatrix> inter;
};

ReverserNoise SampleReverserNoise(const SystemParams& params,
                                  RandomStream& rng);
ReverserNoise ZeroReverserNoise(const SystemParams& params);

// Reversers of database n (zero-based) for the given permutations and pads.
ReverserSet BuildReverserSet(const SystemParams& params,
                             const PermutationSet& perms,
                             const ReverserNoise& noise, size_t database);

// Case1 keeps the segment; Case2 maps it through the inter permutation.
PermutedIndex RealToPermuted(RealIndex real, const PermutationSet& perms,
                             Scheme scheme);
RealIndex PermutedToReal(PermutedIndex permuted, const PermutationSet& perms,
                         Scheme scheme);

// Column c (one-based, c = (j-1) P/B + i) of
// blockdiag(R^[1..B]) * (Rhat kron I_{P/B}), from the stored factors only.
std::vector<FieldElement> Case2ReverserColumn(const PrimeField& field,
                                              const ReverserSet& rev,
                                              size_t column);

// blockdiag(R^[1..B]) * ((Rhat kron I_{P/B}) * y) in two passes.
std::vector<FieldElement> Case2ApplyReverser(const PrimeField& field,
                                             const ReverserSet& rev,
                                             std::span<const FieldElement> y);

// The P x P combined reverser. For verification only: databases never hold it.
FieldMatrix MaterializeCase2Reverser(const PrimeField& field,
                                     const ReverserSet& rev);

nlohmann::json PermutationSetToJson(const PermutationSet& perms);
PermutationSet PermutationSetFromJson(const nlohmann::json& j);
nlohmann::json ReverserSetToJson(const ReverserSet& rev,
                                 const PrimeField& field);
ReverserSet ReverserSetFromJson(const nlohmann::json& j,
                                const PrimeField& field);

}  // namespace pruw
