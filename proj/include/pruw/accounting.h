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
#include <vector>

#include "nlohmann/json.hpp"

#include "pruw/database_node.h"
#include "pruw/params.h"

namespace pruw {

// Closed-form per-user costs, symbols per model parameter.
//
// The real-valued pair is the achievable-cost expression
//   C_R = c r' (1 + log_q P / N) / (1 - 1/N),  C_W = c r (1 + log_q P) / (1 - 1/N)
// with c = 3 (Case1) or 5 (Case2). The ceiling pair counts whole index
// symbols exactly as the wire does:
//   D = P r' ceil(log_q P) + P r' N
//   U = P r N (1 + ceil(log_q B) + ceil(log_q P/B))
struct FormulaCosts {
  double reading = 0;
  double writing = 0;
  Rational reading_ceil;
  Rational writing_ceil;
};

FormulaCosts ComputeFormulaCosts(const SystemParams& params);

// The same costs in their un-simplified D / L and U / L form with real
// logarithms; equal to ComputeFormulaCosts().reading/.writing.
double ReadingCostIntermediate(const SystemParams& params);
double WritingCostIntermediate(const SystemParams& params);

// One round as seen by all N databases.
struct RoundTrace {
  size_t round = 0;
  size_t users = 0;
  std::vector<NodeTraceRow> rows;  // one per database
};

struct CostReport {
  Rational reading_cost;  // downloaded symbols per user / L
  Rational writing_cost;  // uploaded symbols per user / L
  size_t downloaded_symbols = 0;  // all users
  size_t uploaded_symbols = 0;  // all users
  size_t storage_symbols = 0;  // per database
  double formula_reading = 0;
  double formula_writing = 0;
  Rational formula_reading_ceil;
  Rational formula_writing_ceil;
};

// Throws DimensionError when the trace lacks a row per database or the
// designated broadcast is missing.
CostReport MeasuredCosts(const RoundTrace& trace, const SystemParams& params,
                         size_t storage_symbols);

nlohmann::json CostReportToJson(const CostReport& report);

struct StorageComplexity {
  size_t symbols = 0;  // exact per-database count
  std::string label;  // order of growth
};

// Case1: P + B (P/B)^2. Case2: P + B (P/B)^2 + B^2.
StorageComplexity ComputeStorageComplexity(const SystemParams& params);

// Writes a header and one line per report.
void WriteCostCsv(std::ostream& out, std::span<const CostReport> reports);

}  // namespace pruw
