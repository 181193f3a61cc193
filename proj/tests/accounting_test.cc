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

#include "pruw/accounting.h"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "pruw/errors.h"
#include "pruw/simulation.h"
#include "pruw/worked_examples.h"

namespace pruw {
namespace {

double Value(const Rational& r) {
  return static_cast<double>(r.numerator()) / r.denominator();
}

TEST(FormulaCostsTest, ReadingExampleCountsTwentySymbols) {
  const auto params = MakeParams(Scheme::kCase1, 4, 16, 4, Rational(1, 4),
                                 Rational(1, 4));
  const auto f = ComputeFormulaCosts(params);
  EXPECT_EQ(f.reading_ceil, Rational(20, 16));

  SimulationConfig c;
  c.params = params;
  c.users_per_round = 1;
  c.seed = 3;
  Simulation sim(c);
  const auto report = sim.RunRound();
  EXPECT_EQ(report.costs.downloaded_symbols, 20u);
  EXPECT_EQ(report.costs.reading_cost, Rational(20, 16));
  EXPECT_EQ(report.costs.writing_cost, f.writing_ceil);
}

TEST(FormulaCostsTest, ZeroRatesCostNothing) {
  const auto params = MakeParams(Scheme::kCase1, 4, 12, 3, Rational(0),
                                 Rational(0));
  const auto f = ComputeFormulaCosts(params);
  EXPECT_EQ(f.reading, 0.0);
  EXPECT_EQ(f.writing, 0.0);
  EXPECT_EQ(f.reading_ceil, Rational(0));

  SimulationConfig c;
  c.params = params;
  c.users_per_round = 2;
  Simulation sim(c);
  const auto report = sim.RunRound();
  EXPECT_EQ(report.costs.uploaded_symbols, 0u);
  EXPECT_EQ(report.costs.downloaded_symbols, 0u);
}

// The intermediate forms collapse to the closed forms once L = P ell and ell
// is fixed by N.
TEST(FormulaCostsTest, IntermediateFormsMatchClosedForms) {
  for (Scheme s : {Scheme::kCase1, Scheme::kCase2}) {
    for (size_t n : {4, 6, 7, 10, 11, 16, 21}) {
      const size_t c = s == Scheme::kCase1 ? 3 : 5;
      if ((n - 1) % c != 0) continue;
      for (uint64_t q : {uint64_t{257}, kMersenne61}) {
        const auto p = MakeParams(s, n, 24, 4, Rational(1, 6), Rational(1, 8), q);
        const auto f = ComputeFormulaCosts(p);
        EXPECT_NEAR(ReadingCostIntermediate(p), f.reading, 1e-12);
        EXPECT_NEAR(WritingCostIntermediate(p), f.writing, 1e-12);
        const double lq = std::log(24.0) / std::log(static_cast<double>(q));
        const double l = static_cast<double>(p.model_size());
        EXPECT_NEAR(ReadingCostIntermediate(p) * l, 3 * lq + 3.0 * n, 1e-9);
        EXPECT_NEAR(WritingCostIntermediate(p) * l, 4.0 * n * (1 + lq), 1e-9);
      }
    }
  }
}

TEST(FormulaCostsTest, CeilingGapIsBounded) {
  for (Scheme s : {Scheme::kCase1, Scheme::kCase2}) {
    const size_t n = s == Scheme::kCase1 ? 7 : 11;
    for (uint64_t q : {uint64_t{13}, uint64_t{257}, kMersenne61}) {
      for (size_t b : {1, 2, 3, 4, 6, 12}) {
        const auto p = MakeParams(s, n, 12, b, Rational(1, 4), Rational(1, 6), q);
        const auto f = ComputeFormulaCosts(p);
        const double l = static_cast<double>(p.model_size());
        const double read_gap = Value(f.reading_ceil) - f.reading;
        const double write_gap = Value(f.writing_ceil) - f.writing;
        EXPECT_GE(read_gap, -1e-12);
        EXPECT_LE(read_gap, p.downlink_count() / l + 1e-12);
        EXPECT_GE(write_gap, -1e-12);
        EXPECT_LE(write_gap, 2.0 * p.uplink_count() * n / l + 1e-12);
      }
    }
  }
}

TEST(MeasuredCostsTest, IncompleteTraceThrows) {
  const auto params = MakeParams(Scheme::kCase1, 4, 16, 4, Rational(1, 4),
                                 Rational(1, 4));
  RoundTrace trace;
  trace.round = 1;
  trace.users = 1;
  trace.rows.resize(3);
  EXPECT_THROW(MeasuredCosts(trace, params, 0), DimensionError);
  trace.rows.resize(4);
  for (auto& r : trace.rows) r.round = 1;
  // No designated broadcast recorded.
  EXPECT_THROW(MeasuredCosts(trace, params, 0), DimensionError);
  trace.users = 0;
  EXPECT_THROW(MeasuredCosts(trace, params, 0), DimensionError);
}

TEST(StorageComplexityTest, CountsMatchNodes) {
  const auto c1 = ComputeStorageComplexity(ReferenceConfigCase1().params);
  EXPECT_EQ(c1.symbols, 90u);
  const auto c2 = ComputeStorageComplexity(ReferenceConfigCase2().params);
  EXPECT_EQ(c2.symbols, 69u);
  // B = P leaves scalar reversers.
  const auto p = MakeParams(Scheme::kCase1, 4, 12, 12, Rational(1, 4),
                            Rational(1, 4));
  EXPECT_EQ(ComputeStorageComplexity(p).symbols, 24u);

  for (auto config : {ReferenceConfigCase1(), ReferenceConfigCase2()}) {
    Simulation sim(config);
    for (const auto& node : sim.nodes()) {
      EXPECT_EQ(node.stored_symbol_count(),
                ComputeStorageComplexity(config.params).symbols);
    }
  }
}

TEST(CostCsvTest, Header) {
  std::ostringstream out;
  WriteCostCsv(out, {});
  EXPECT_EQ(out.str().substr(0, 6), "round,");
}

}  // namespace
}  // namespace pruw
