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

#include <cmath>
#include <ostream>

#include "pruw/errors.h"

namespace pruw {
namespace {

double LogQ(double x, uint64_t q) {
  return std::log(x) / std::log(static_cast<double>(q));
}

double ToDouble(const Rational& r) {
  return static_cast<double>(r.numerator()) /
         static_cast<double>(r.denominator());
}

int64_t I(size_t v) { return static_cast<int64_t>(v); }

}  // namespace

FormulaCosts ComputeFormulaCosts(const SystemParams& params) {
  const double n = static_cast<double>(params.num_databases);
  const double c = params.scheme == Scheme::kCase1 ? 3.0 : 5.0;
  const double log_p =
      LogQ(static_cast<double>(params.num_subpackets), params.field.modulus());
  FormulaCosts out;
  out.reading = c * ToDouble(params.downlink_rate) * (1 + log_p / n) / (1 - 1 / n);
  out.writing = c * ToDouble(params.uplink_rate) * (1 + log_p) / (1 - 1 / n);

  const uint64_t q = params.field.modulus();
  const size_t down = params.downlink_count();
  const size_t up = params.uplink_count();
  const size_t d = down * IndexSymbols(params.num_subpackets, q) +
                   down * params.num_databases;
  const size_t u = up * params.num_databases *
                   (1 + IndexSymbols(params.num_segments, q) +
                    IndexSymbols(params.segment_size(), q));
  out.reading_ceil = Rational(I(d), I(params.model_size()));
  out.writing_ceil = Rational(I(u), I(params.model_size()));
  return out;
}

double ReadingCostIntermediate(const SystemParams& params) {
  const uint64_t q = params.field.modulus();
  const double pr = static_cast<double>(params.downlink_count());
  const double l = static_cast<double>(params.model_size());
  const double n = static_cast<double>(params.num_databases);
  if (params.scheme == Scheme::kCase1) {
    return (pr * LogQ(static_cast<double>(params.num_subpackets), q) + pr * n) / l;
  }
  return pr *
         (n + LogQ(static_cast<double>(params.num_segments), q) +
          LogQ(static_cast<double>(params.segment_size()), q)) /
         l;
}

double WritingCostIntermediate(const SystemParams& params) {
  const uint64_t q = params.field.modulus();
  const double pr = static_cast<double>(params.uplink_count());
  const double l = static_cast<double>(params.model_size());
  const double n = static_cast<double>(params.num_databases);
  return pr * n *
         (1 + LogQ(static_cast<double>(params.num_segments), q) +
          LogQ(static_cast<double>(params.segment_size()), q)) /
         l;
}

CostReport MeasuredCosts(const RoundTrace& trace, const SystemParams& params,
                         size_t storage_symbols) {
  if (trace.rows.size() != params.num_databases) {
    throw DimensionError("round trace must hold one row per database, got " +
                         std::to_string(trace.rows.size()));
  }
  if (trace.users == 0) throw DimensionError("round trace has no users");
  CostReport r;
  for (const auto& row : trace.rows) {
    if (row.round != trace.round) {
      throw DimensionError("round trace mixes rounds");
    }
    r.downloaded_symbols += row.symbols_downloaded;
    r.uploaded_symbols += row.symbols_uploaded;
  }
  if (params.downlink_count() > 0 && trace.rows.front().downlink_broadcast.empty()) {
    throw DimensionError("round trace lacks the designated index broadcast");
  }
  const int64_t per_user_l = I(trace.users) * I(params.model_size());
  r.reading_cost = Rational(I(r.downloaded_symbols), per_user_l);
  r.writing_cost = Rational(I(r.uploaded_symbols), per_user_l);
  r.storage_symbols = storage_symbols;
  const FormulaCosts f = ComputeFormulaCosts(params);
  r.formula_reading = f.reading;
  r.formula_writing = f.writing;
  r.formula_reading_ceil = f.reading_ceil;
  r.formula_writing_ceil = f.writing_ceil;
  return r;
}

nlohmann::json CostReportToJson(const CostReport& report) {
  return {
      {"reading_cost", ToString(report.reading_cost)},
      {"writing_cost", ToString(report.writing_cost)},
      {"reading_cost_value", ToDouble(report.reading_cost)},
      {"writing_cost_value", ToDouble(report.writing_cost)},
      {"downloaded_symbols", report.downloaded_symbols},
      {"uploaded_symbols", report.uploaded_symbols},
      {"storage_symbols", report.storage_symbols},
      {"formula_reading", report.formula_reading},
      {"formula_writing", report.formula_writing},
      {"formula_reading_ceil", ToString(report.formula_reading_ceil)},
      {"formula_writing_ceil", ToString(report.formula_writing_ceil)},
  };
}

StorageComplexity ComputeStorageComplexity(const SystemParams& params) {
  const size_t m = params.segment_size();
  StorageComplexity out;
  out.symbols = params.num_subpackets + params.num_segments * m * m;
  if (params.scheme == Scheme::kCase1) {
    out.label = "O(L^2/(B N^2))";
  } else {
    out.symbols += params.num_segments * params.num_segments;
    out.label = "max{O(L^2/(B N^2)), O(B^2)}";
  }
  return out;
}

void WriteCostCsv(std::ostream& out, std::span<const CostReport> reports) {
  out << "round,reading_cost,writing_cost,downloaded_symbols,uploaded_symbols,"
         "storage_symbols,formula_reading,formula_writing,formula_reading_ceil,"
         "formula_writing_ceil\n";
  size_t round = 1;
  for (const auto& r : reports) {
    out << round++ << ',' << ToString(r.reading_cost) << ','
        << ToString(r.writing_cost) << ',' << r.downloaded_symbols << ','
        << r.uploaded_symbols << ',' << r.storage_symbols << ','
        << r.formula_reading << ',' << r.formula_writing << ','
        << ToString(r.formula_reading_ceil) << ','
        << ToString(r.formula_writing_ceil) << '\n';
  }
}

}  // namespace pruw
