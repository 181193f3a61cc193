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

#include "pruw/database_node.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "pruw/errors.h"

namespace pruw {
namespace {

std::string FormatPairs(std::span<const PermutedIndex> pairs) {
  std::string out;
  for (const auto& p : pairs) {
    if (!out.empty()) out += ';';
    out += std::to_string(p.subpacket) + ":" + std::to_string(p.segment);
  }
  return out;
}

}  // namespace

size_t UpdateHistogram::offset(PermutedIndex at) const {
  if (at.subpacket == 0 || at.subpacket > segment_size_ || at.segment == 0 ||
      at.segment > num_segments_) {
    throw IndexError("histogram position (" + std::to_string(at.subpacket) +
                     ", " + std::to_string(at.segment) + ") out of range");
  }
  return (at.segment - 1) * segment_size_ + (at.subpacket - 1);
}

void UpdateHistogram::add(PermutedIndex at) { ++counts_[offset(at)]; }

size_t UpdateHistogram::count(PermutedIndex at) const {
  return counts_[offset(at)];
}

size_t UpdateHistogram::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), size_t{0});
}

void UpdateHistogram::clear() { std::fill(counts_.begin(), counts_.end(), 0); }

std::vector<PermutedIndex> SelectDownlink(const UpdateHistogram& hist,
                                          const SystemParams& params) {
  const size_t m = params.segment_size();
  if (hist.segment_size() != m || hist.num_segments() != params.num_segments) {
    throw DimensionError("histogram shape does not match parameters");
  }
  std::vector<PermutedIndex> all;
  all.reserve(params.num_subpackets);
  for (size_t j = 1; j <= params.num_segments; ++j) {
    for (size_t i = 1; i <= m; ++i) all.push_back({i, j});
  }
  // all is already in (segment, subpacket) order; stable_sort keeps ties there.
  std::stable_sort(all.begin(), all.end(),
                   [&](const PermutedIndex& a, const PermutedIndex& b) {
                     return hist.count(a) > hist.count(b);
                   });
  all.resize(params.downlink_count());
  return all;
}

std::vector<FieldElement> AssemblePermutedUpdates(
    std::span<const WriteTuple> tuples, const SystemParams& params) {
  const size_t m = params.segment_size();
  std::vector<FieldElement> y(params.num_subpackets);
  std::vector<bool> seen(params.num_subpackets, false);
  for (const auto& t : tuples) {
    const auto& at = t.position;
    if (at.subpacket == 0 || at.subpacket > m || at.segment == 0 ||
        at.segment > params.num_segments) {
      throw IndexError("write position (" + std::to_string(at.subpacket) +
                       ", " + std::to_string(at.segment) + ") out of range");
    }
    const size_t off = (at.segment - 1) * m + (at.subpacket - 1);
    if (seen[off]) {
      throw ProtocolError("duplicate write position (" +
                          std::to_string(at.subpacket) + ", " +
                          std::to_string(at.segment) + ") from one user");
    }
    seen[off] = true;
    y[off] = t.combined_update;
  }
  return y;
}

void WriteTraceCsv(std::ostream& out, std::span<const NodeTraceRow> rows) {
  out << "round,database,tuples_received,downlink_broadcast,symbols_uploaded,"
         "symbols_downloaded\n";
  for (const auto& r : rows) {
    out << r.round << ',' << r.database << ',' << FormatPairs(r.tuples_received)
        << ',' << FormatPairs(r.downlink_broadcast) << ',' << r.symbols_uploaded
        << ',' << r.symbols_downloaded << '\n';
  }
}

size_t IndexSymbols(size_t m, uint64_t q) {
  if (m == 0) throw IndexError("index range must be non-empty");
  size_t k = 0;
  unsigned __int128 reach = 1;
  while (reach < m) {
    reach *= q;
    ++k;
  }
  return k;
}

DatabaseNode::DatabaseNode(const SystemParams& params, size_t index,
                           StorageState storage, ReverserSet reversers)
    : params_(params),
      index_(index),
      storage_(std::move(storage)),
      reversers_(std::move(reversers)),
      histogram_(params.segment_size(), params.num_segments) {
  if (index >= params.num_databases) {
    throw IndexError("database index out of range");
  }
  if (storage_.symbols.size() != params.num_subpackets) {
    throw DimensionError("storage must hold P symbols");
  }
  const size_t m = params.segment_size();
  if (reversers_.within.size() != params.num_segments) {
    throw DimensionError("need one within-segment reverser per segment");
  }
  for (const auto& r : reversers_.within) {
    if (r.rows() != m || r.cols() != m) {
      throw DimensionError("within-segment reversers must be (P/B) x (P/B)");
    }
  }
  if ((params.scheme == Scheme::kCase2) != reversers_.inter.has_value()) {
    throw DimensionError("inter-segment reverser must be present iff case2");
  }
  if (reversers_.inter && (reversers_.inter->rows() != params.num_segments ||
                           reversers_.inter->cols() != params.num_segments)) {
    throw DimensionError("inter-segment reverser must be B x B");
  }
}

std::vector<FieldElement> DatabaseNode::BuildReadQuery(PermutedIndex at) const {
  const size_t m = params_.segment_size();
  if (at.subpacket == 0 || at.subpacket > m || at.segment == 0 ||
      at.segment > params_.num_segments) {
    throw IndexError("read position out of range");
  }
  if (params_.scheme == Scheme::kCase1) {
    return reversers_.within[at.segment - 1].column(at.subpacket - 1);
  }
  return Case2ReverserColumn(params_.field, reversers_,
                             (at.segment - 1) * m + at.subpacket);
}

FieldElement DatabaseNode::AnswerReadQuery(
    PermutedIndex at, std::span<const FieldElement> query) const {
  if (params_.scheme == Scheme::kCase1) {
    return Dot(params_.field,
               storage_.segment(at.segment, params_.segment_size()), query);
  }
  return Dot(params_.field, storage_.symbols, query);
}

void DatabaseNode::ApplyWrite(std::span<const WriteTuple> tuples) {
  if (tuples.empty()) return;
  const std::vector<FieldElement> y = AssemblePermutedUpdates(tuples, params_);
  const PrimeField& field = params_.field;
  const size_t m = params_.segment_size();
  if (params_.scheme == Scheme::kCase1) {
    std::vector<bool> touched(params_.num_segments, false);
    for (const auto& t : tuples) touched[t.position.segment - 1] = true;
    for (size_t j = 1; j <= params_.num_segments; ++j) {
      if (!touched[j - 1]) continue;
      auto y_seg = std::span<const FieldElement>(y).subspan((j - 1) * m, m);
      auto increment = Multiply(field, reversers_.within[j - 1], y_seg);
      auto seg = storage_.segment(j, m);
      for (size_t i = 0; i < m; ++i) seg[i] = field.add(seg[i], increment[i]);
    }
  } else {
    auto increment = Case2ApplyReverser(field, reversers_, y);
    for (size_t i = 0; i < increment.size(); ++i) {
      storage_.symbols[i] = field.add(storage_.symbols[i], increment[i]);
    }
  }

  const size_t per_tuple = 1 + IndexSymbols(params_.num_segments, field.modulus()) +
                           IndexSymbols(m, field.modulus());
  NodeTraceRow* row = trace_.empty() ? nullptr : &trace_.back();
  for (const auto& t : tuples) {
    histogram_.add(t.position);
    if (row) {
      row->tuples_received.push_back(t.position);
      row->symbols_uploaded += per_tuple;
    }
  }
}

void DatabaseNode::BeginRound(size_t round) {
  histogram_.clear();
  NodeTraceRow row;
  row.round = round;
  row.database = index_ + 1;
  trace_.push_back(std::move(row));
}

void DatabaseNode::RecordDownlink(std::span<const PermutedIndex> pairs) {
  NodeTraceRow& row = current_row();
  row.symbols_downloaded += pairs.size();
  if (is_designated()) {
    row.downlink_broadcast.assign(pairs.begin(), pairs.end());
    row.symbols_downloaded +=
        pairs.size() *
        IndexSymbols(params_.num_subpackets, params_.field.modulus());
  }
}

NodeTraceRow& DatabaseNode::current_row() {
  if (trace_.empty()) throw ProtocolError("no round in progress");
  return trace_.back();
}

size_t DatabaseNode::stored_symbol_count() const {
  return storage_.symbols.size() + reversers_.symbol_count();
}

}  // namespace pruw
