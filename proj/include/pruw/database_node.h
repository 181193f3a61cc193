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
#include <ostream>
#include <span>
#include <vector>

#include "pruw/coded_storage.h"
#include "pruw/finite_field.h"
#include "pruw/params.h"
#include "pruw/permutations.h"

namespace pruw {

// What one database receives for one sparse subpacket of one user.
struct WriteTuple {
  FieldElement combined_update;
  PermutedIndex position;
};

// Per-position update counts in permuted coordinates.
class UpdateHistogram {
 public:
  UpdateHistogram() = default;
  UpdateHistogram(size_t segment_size, size_t num_segments)
      : segment_size_(segment_size),
        num_segments_(num_segments),
        counts_(segment_size * num_segments, 0) {}

  void add(PermutedIndex at);
  size_t count(PermutedIndex at) const;
  size_t total() const;
  void clear();

  size_t segment_size() const { return segment_size_; }
  size_t num_segments() const { return num_segments_; }

  friend bool operator==(const UpdateHistogram&,
                         const UpdateHistogram&) = default;

 private:
  size_t offset(PermutedIndex at) const;

  size_t segment_size_ = 0;
  size_t num_segments_ = 0;
  std::vector<size_t> counts_;
};

// The P r' most frequently updated positions. Ties go to the smaller
// (segment, subpacket) in permuted coordinates, so an empty histogram yields
// the lexicographically first positions.
std::vector<PermutedIndex> SelectDownlink(const UpdateHistogram& hist,
                                          const SystemParams& params);

// Y in permuted coordinates, position (i, j) at offset (j-1) P/B + i - 1.
// Throws ProtocolError if a position repeats.
std::vector<FieldElement> AssemblePermutedUpdates(
    std::span<const WriteTuple> tuples, const SystemParams& params);

// Symbols sent and received by one node in one round.
struct NodeTraceRow {
  size_t round = 0;
  size_t database = 0;  // one-based
  std::vector<PermutedIndex> tuples_received;
  std::vector<PermutedIndex> downlink_broadcast;  // empty unless designated
  size_t symbols_uploaded = 0;  // user -> database
  size_t symbols_downloaded = 0;  // database -> users
};

// Writes a header followed by one row per entry.
void WriteTraceCsv(std::ostream& out, std::span<const NodeTraceRow> rows);

// ceil(log_q m): q-ary symbols needed to name an index in [1, m].
size_t IndexSymbols(size_t m, uint64_t q);

// One database: owns its storage and reversers; sees only permuted indices.
class DatabaseNode {
 public:
  // index is zero-based; database 0 is the designated broadcaster.
  DatabaseNode(const SystemParams& params, size_t index, StorageState storage,
               ReverserSet reversers);

  size_t index() const { return index_; }
  FieldElement alpha() const { return params_.alphas[index_]; }
  const StorageState& storage() const { return storage_; }
  const ReverserSet& reversers() const { return reversers_; }
  const UpdateHistogram& histogram() const { return histogram_; }
  bool is_designated() const { return index_ == 0; }

  // Case1: column i of R^[j]. Case2: column (j-1) P/B + i of the combined
  // reverser.
  std::vector<FieldElement> BuildReadQuery(PermutedIndex at) const;
  // Inner product with the segment (Case1) or whole storage (Case2).
  FieldElement AnswerReadQuery(PermutedIndex at,
                               std::span<const FieldElement> query) const;
  FieldElement Answer(PermutedIndex at) const {
    return AnswerReadQuery(at, BuildReadQuery(at));
  }

  // One user's tuples: un-permutes through the reversers and adds the result
  // to storage. Also feeds the histogram.
  void ApplyWrite(std::span<const WriteTuple> tuples);

  // Starts a round: clears the histogram and opens a trace row.
  void BeginRound(size_t round);
  // Records that this node served the downlink of one user.
  void RecordDownlink(std::span<const PermutedIndex> pairs);

  std::span<const NodeTraceRow> trace() const { return trace_; }

  // Storage plus every reverser entry held.
  size_t stored_symbol_count() const;

 private:
  NodeTraceRow& current_row();

  SystemParams params_;
  size_t index_;
  StorageState storage_;
  ReverserSet reversers_;
  UpdateHistogram histogram_;
  std::vector<NodeTraceRow> trace_;
};

}  // namespace pruw
