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
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "pruw/finite_field.h"

namespace pruw {

using Rational = boost::rational<int64_t>;

std::string ToString(const Rational& r);
// Accepts "a/b", "a" or a decimal such as "0.25".
Rational ParseRational(const std::string& text);

// Case1 permutes subpackets within each segment only. Case2 additionally
// permutes the segments themselves, which hides the segment index at the cost
// of a higher-degree noise polynomial.
enum class Scheme { kCase1, kCase2 };

std::string ToString(Scheme scheme);
Scheme ParseScheme(const std::string& text);

// Parameters per subpacket for N databases: (N-1)/3 or (N-1)/5.
size_t Subpacketization(size_t num_databases, Scheme scheme);

struct SystemParams {
  size_t num_databases = 0;  // N
  size_t num_subpackets = 0;  // P
  size_t num_segments = 0;  // B
  size_t subpacket_size = 0;  // ell
  Scheme scheme = Scheme::kCase1;
  Rational uplink_rate;  // r
  Rational downlink_rate;  // r'
  PrimeField field;
  EvaluationPoints alphas;

  // P / B
  size_t segment_size() const { return num_subpackets / num_segments; }
  // L = P * ell
  size_t model_size() const { return num_subpackets * subpacket_size; }
  // P * r, sparse subpackets a user writes in one round.
  size_t uplink_count() const;
  // P * r', sparse subpackets the databases send in one round.
  size_t downlink_count() const;
  // Highest noise exponent in a stored symbol: ell (Case1) or 2 ell (Case2).
  int64_t storage_noise_degree() const;
  // Highest exponent in a read answer: 2 ell (Case1) or 4 ell (Case2).
  int64_t answer_degree() const;
};

// Builds and validates a parameter set. When alphas is empty the defaults
// alpha_n = n are used.
SystemParams MakeParams(Scheme scheme, size_t num_databases,
                        size_t num_subpackets, size_t num_segments,
                        Rational uplink_rate, Rational downlink_rate,
                        uint64_t modulus = kMersenne61,
                        std::vector<uint64_t> alphas = {});

}  // namespace pruw
