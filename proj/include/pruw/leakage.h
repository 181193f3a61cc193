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
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pruw/params.h"

// Index leakage of segmented sparse writes.
//
// A user picks Pr of the P subpackets, each Pr-subset equally likely. A Case1
// database learns the per-segment counts (X_1..X_B); a Case2 database, whose
// segment indices are permuted, learns only their multiset. All entropies are
// in bits and computed from exact rational probabilities.
namespace pruw::leakage {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Per-segment counts, in segment order or (for the sorted variant) descending.
using CountVector = std::vector<size_t>;
using Pmf = std::map<CountVector, BigRational>;

BigInt Binomial(size_t n, size_t k);

// Multivariate hypergeometric: prod_i C(P/B, x_i) / C(P, Pr).
Pmf PmfHat(size_t p, size_t b, size_t pr);
// Push-forward of PmfHat under descending sort.
Pmf PmfTilde(size_t p, size_t b, size_t pr);

double EntropyBits(const Pmf& pmf);
double EntropyHat(size_t p, size_t b, size_t pr);
double EntropyTilde(size_t p, size_t b, size_t pr);

// Largest C(P, Pr) BruteForceEntropies will enumerate.
inline constexpr uint64_t kBruteForceLimit = 10'000'000;

struct BruteForceResult {
  double entropy_hat = 0;
  double entropy_tilde = 0;
  Pmf pmf_hat;
  Pmf pmf_tilde;
  uint64_t subsets = 0;
};

// Walks every Pr-subset of {1..P}. Throws ConfigError above kBruteForceLimit.
BruteForceResult BruteForceEntropies(size_t p, size_t b, size_t pr);

struct SweepRow {
  size_t segments = 0;  // B
  double entropy_hat = 0;
  double entropy_tilde = 0;
  size_t storage_case1 = 0;  // P + B (P/B)^2
  size_t storage_case2 = 0;  // P + B (P/B)^2 + B^2
  BigInt subsets;  // C(P, Pr)
};

std::vector<SweepRow> SweepLeakage(size_t p, size_t pr,
                                   std::span<const size_t> segment_counts);

// Largest B in rows with leakage <= epsilon under the given scheme's entropy.
std::optional<size_t> MaxSegmentsWithinBudget(std::span<const SweepRow> rows,
                                              double epsilon, Scheme scheme);

// Columns: B,H_hat_bits,H_tilde_bits,C(P,Pr),storage_case1,storage_case2.
void WriteSweepCsv(std::ostream& out, std::span<const SweepRow> rows);

}  // namespace pruw::leakage
