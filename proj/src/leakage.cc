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

#include "pruw/leakage.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <string>

#include "pruw/errors.h"

namespace pruw::leakage {
namespace {

void CheckArgs(size_t p, size_t b, size_t pr) {
  if (p == 0 || b == 0 || p % b != 0) {
    throw ConfigError("B must divide P: P=" + std::to_string(p) +
                      ", B=" + std::to_string(b));
  }
  if (pr > p) {
    throw ConfigError("Pr must lie in [0, P]: Pr=" + std::to_string(pr));
  }
}

CountVector Sorted(CountVector v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

// log2 of a positive rational, accurate even when it underflows a double.
double Log2(const BigRational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  auto log2_int = [](const BigInt& v) {
    const size_t bits = boost::multiprecision::msb(v);
    if (bits < 53) return std::log2(v.convert_to<double>());
    const size_t shift = bits - 52;
    return std::log2(static_cast<BigInt>(v >> shift).convert_to<double>()) +
           static_cast<double>(shift);
  };
  return log2_int(num) - log2_int(den);
}

}  // namespace

BigInt Binomial(size_t n, size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (size_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Pmf PmfHat(size_t p, size_t b, size_t pr) {
  CheckArgs(p, b, pr);
  const size_t m = p / b;
  const BigInt total = Binomial(p, pr);
  Pmf pmf;
  CountVector counts(b, 0);
  // Enumerate compositions of pr into b parts, each at most m.
  std::function<void(size_t, size_t, BigInt)> walk = [&](size_t seg,
                                                         size_t left,
                                                         BigInt weight) {
    if (seg + 1 == b) {
      if (left > m) return;
      counts[seg] = left;
      pmf[counts] = BigRational(weight * Binomial(m, left), total);
      return;
    }
    const size_t hi = std::min(m, left);
    for (size_t x = 0; x <= hi; ++x) {
      if (left - x > m * (b - seg - 1)) continue;
      counts[seg] = x;
      walk(seg + 1, left - x, weight * Binomial(m, x));
    }
  };
  walk(0, pr, 1);
  return pmf;
}

Pmf PmfTilde(size_t p, size_t b, size_t pr) {
  Pmf out;
  for (const auto& [counts, prob] : PmfHat(p, b, pr)) out[Sorted(counts)] += prob;
  return out;
}

double EntropyBits(const Pmf& pmf) {
  double h = 0;
  for (const auto& [_, prob] : pmf) {
    if (prob == 0) continue;
    h -= prob.convert_to<double>() * Log2(prob);
  }
  // -0.0 for degenerate distributions reads oddly in CSV output.
  return h == 0 ? 0.0 : h;
}

double EntropyHat(size_t p, size_t b, size_t pr) {
  return EntropyBits(PmfHat(p, b, pr));
}

double EntropyTilde(size_t p, size_t b, size_t pr) {
  return EntropyBits(PmfTilde(p, b, pr));
}

BruteForceResult BruteForceEntropies(size_t p, size_t b, size_t pr) {
  CheckArgs(p, b, pr);
  const BigInt total = Binomial(p, pr);
  if (total > kBruteForceLimit) {
    throw ConfigError("C(P, Pr) = " + total.str() +
                      " exceeds the enumeration limit");
  }
  const size_t m = p / b;
  std::map<CountVector, uint64_t> hat_freq;
  std::map<CountVector, uint64_t> tilde_freq;
  std::vector<size_t> subset(pr);
  for (size_t i = 0; i < pr; ++i) subset[i] = i;
  uint64_t visited = 0;
  while (true) {
    CountVector counts(b, 0);
    for (size_t s : subset) ++counts[s / m];
    ++tilde_freq[Sorted(counts)];
    ++hat_freq[std::move(counts)];
    ++visited;
    // Next combination in lexicographic order.
    size_t i = pr;
    while (i > 0 && subset[i - 1] == p - pr + i - 1) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (size_t k = i; k < pr; ++k) subset[k] = subset[k - 1] + 1;
  }
  BruteForceResult out;
  out.subsets = visited;
  for (const auto& [c, f] : hat_freq) out.pmf_hat[c] = BigRational(f, visited);
  for (const auto& [c, f] : tilde_freq) out.pmf_tilde[c] = BigRational(f, visited);
  out.entropy_hat = EntropyBits(out.pmf_hat);
  out.entropy_tilde = EntropyBits(out.pmf_tilde);
  return out;
}

std::vector<SweepRow> SweepLeakage(size_t p, size_t pr,
                                   std::span<const size_t> segment_counts) {
  std::vector<SweepRow> rows;
  for (size_t b : segment_counts) {
    CheckArgs(p, b, pr);
    const size_t m = p / b;
    SweepRow row;
    row.segments = b;
    row.entropy_hat = EntropyHat(p, b, pr);
    row.entropy_tilde = EntropyTilde(p, b, pr);
    row.storage_case1 = p + b * m * m;
    row.storage_case2 = row.storage_case1 + b * b;
    row.subsets = Binomial(p, pr);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<size_t> MaxSegmentsWithinBudget(std::span<const SweepRow> rows,
                                              double epsilon, Scheme scheme) {
  std::optional<size_t> best;
  for (const auto& row : rows) {
    const double h =
        scheme == Scheme::kCase1 ? row.entropy_hat : row.entropy_tilde;
    if (h <= epsilon && (!best || row.segments > *best)) best = row.segments;
  }
  return best;
}

void WriteSweepCsv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "B,H_hat_bits,H_tilde_bits,C(P,Pr),storage_case1,storage_case2\n";
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(12);
  for (const auto& r : rows) {
    out << r.segments << ',' << r.entropy_hat << ',' << r.entropy_tilde << ','
        << r.subsets.str() << ',' << r.storage_case1 << ',' << r.storage_case2
        << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace pruw::leakage
