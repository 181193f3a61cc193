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
#include <initializer_list>
#include <random>
#include <string_view>

#include "pruw/finite_field.h"

namespace pruw {

// Seeded stream. Everything drawn from it is a pure function of the seed, on
// any standard library: only the fully specified mt19937_64 engine is used and
// the distributions below are implemented here.
class RandomStream {
 public:
  explicit RandomStream(uint64_t seed) : engine_(seed) {}

  // Independent named sub-stream of a root seed, e.g.
  // Derive(seed, "user-gradients", {round, user}).
  static RandomStream Derive(uint64_t root_seed, std::string_view name,
                             std::initializer_list<uint64_t> indices = {});

  uint64_t next() { return engine_(); }
  // Uniform in [0, bound); bound > 0.
  uint64_t below(uint64_t bound);
  // Uniform in [0, 1) with 53 bits.
  double unit();
  FieldElement uniform(const PrimeField& field) {
    return FieldElement(below(field.modulus()));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pruw
