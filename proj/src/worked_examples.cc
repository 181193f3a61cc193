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

#include "pruw/worked_examples.h"

#include <exception>
#include <functional>
#include <initializer_list>
#include <set>
#include <sstream>
#include <utility>

#include "pruw/accounting.h"
#include "pruw/client.h"
#include "pruw/database_node.h"

namespace pruw {
namespace {

using Rows = std::initializer_list<std::initializer_list<uint64_t>>;

FieldMatrix Literal(Rows rows) {
  FieldMatrix m(rows.size(), rows.begin()->size());
  size_t r = 0;
  for (const auto& row : rows) {
    size_t c = 0;
    for (uint64_t v : row) m.at(r, c++) = FieldElement(v);
    ++r;
  }
  return m;
}

std::vector<FieldElement> Vec(std::initializer_list<uint64_t> values) {
  std::vector<FieldElement> v;
  for (uint64_t x : values) v.emplace_back(x);
  return v;
}

// Places (m x m) blocks on a (B m x B m) grid; blocks[k] goes to
// (row_block[k], col_block[k]).
FieldMatrix BlockLiteral(size_t m, size_t b,
                         const std::vector<std::pair<size_t, size_t>>& where,
                         const std::vector<FieldMatrix>& blocks) {
  FieldMatrix out(b * m, b * m);
  for (size_t k = 0; k < blocks.size(); ++k) {
    for (size_t r = 0; r < m; ++r) {
      for (size_t c = 0; c < m; ++c) {
        out.at(where[k].first * m + r, where[k].second * m + c) =
            blocks[k].at(r, c);
      }
    }
  }
  return out;
}

std::string Show(const std::vector<FieldElement>& v) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].value;
  os << ']';
  return os.str();
}

template <typename Index>
std::string Show(const std::vector<Index>& v) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < v.size(); ++i) {
    os << (i ? "," : "") << '(' << v[i].subpacket << ',' << v[i].segment << ')';
  }
  os << '}';
  return os.str();
}

class Checker {
 public:
  void Expect(std::string name, bool ok, std::string detail = "") {
    checks_.push_back({std::move(name), ok, ok ? "" : std::move(detail)});
  }
  // Runs body; an exception marks the check failed.
  void Run(const std::string& name, const std::function<void(Checker&)>& body) {
    try {
      body(*this);
    } catch (const std::exception& e) {
      checks_.push_back({name, false, std::string("threw: ") + e.what()});
    }
  }
  std::vector<ExampleCheck> take() { return std::move(checks_); }

 private:
  std::vector<ExampleCheck> checks_;
};

// A single user whose largest scores sit exactly on the given subpackets.
GradientSource Peaked(const SystemParams& params,
                      const std::vector<RealIndex>& targets) {
  return [params, targets](size_t, size_t) {
    PseudoGradients g(params.num_subpackets,
                      std::vector<double>(params.subpacket_size, 0.001));
    double bump = 1.0;
    for (const auto& t : targets) {
      for (double& v : g[GlobalSubpacket(t, params) - 1]) v = bump;
      bump += 0.5;
    }
    return g;
  };
}

SparseSelection SelectionOf(const std::vector<RealIndex>& pairs, size_t ell) {
  SparseSelection sel;
  sel.pairs = pairs;
  for (size_t k = 0; k < pairs.size(); ++k) {
    sel.deltas.push_back(std::vector<FieldElement>(ell, FieldElement(k + 1)));
  }
  return sel;
}

std::vector<PermutedIndex> Positions(const std::vector<WriteTuple>& tuples) {
  std::vector<PermutedIndex> out;
  for (const auto& t : tuples) out.push_back(t.position);
  return out;
}

void CheckCase1(Checker& check) {
  const SimulationConfig config = ReferenceConfigCase1();
  const SystemParams& params = config.params;
  const PermutationSet perms = ReferencePermutationsCase1();
  const ReverserNoise zero = ZeroReverserNoise(params);
  const ReverserSet rev = BuildReverserSet(params, perms, zero, 0);

  const FieldMatrix eq8 = Literal({{0, 1, 0, 0, 0},
                                   {1, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 1},
                                   {0, 0, 1, 0, 0},
                                   {0, 0, 0, 1, 0}});
  check.Expect("case1/reverser_segment1", rev.within[0] == eq8,
               "noiseless R^[1] differs from the reference matrix");

  std::vector<RealIndex> v1;
  for (size_t i : {1, 3}) v1.push_back(PermutedToReal({i, 1}, perms, params.scheme));
  check.Expect("case1/downlink_mapping",
               v1 == std::vector<RealIndex>{{2, 1}, {4, 1}},
               "permuted {1,3} of segment 1 maps to " + Show(v1));

  DatabaseNode node(params, 0, StorageState{std::vector<FieldElement>(15)}, rev);
  const auto query = node.BuildReadQuery({1, 1});
  check.Expect("case1/read_query", query == Vec({0, 1, 0, 0, 0}),
               "query for permuted (1,1) is " + Show(query));

  const std::vector<RealIndex> real = {{2, 1}, {4, 1}, {2, 2}, {5, 3}};
  RandomStream pads(7);
  const auto tuples =
      BuildWriteTuples(SelectionOf(real, params.subpacket_size), perms, params, pads);
  const auto permuted = Positions(tuples[0]);
  check.Expect("case1/write_tuples",
               permuted == std::vector<PermutedIndex>{{1, 1}, {3, 1}, {3, 2}, {1, 3}},
               "tuples went to " + Show(permuted));

  // Symbolic stand-ins for U^[2,1], U^[4,1], U^[2,2], U^[5,3].
  const std::vector<WriteTuple> sent = {{FieldElement(21), {1, 1}},
                                        {FieldElement(41), {3, 1}},
                                        {FieldElement(22), {3, 2}},
                                        {FieldElement(53), {1, 3}}};
  const auto y = AssemblePermutedUpdates(sent, params);
  check.Expect("case1/update_vectors",
               y == Vec({21, 0, 41, 0, 0, 0, 0, 22, 0, 0, 53, 0, 0, 0, 0}),
               "Y = " + Show(y));

  DatabaseNode writer(params, 0, StorageState{std::vector<FieldElement>(15)}, rev);
  writer.ApplyWrite(sent);
  const auto& s = writer.storage().symbols;
  check.Expect("case1/placement",
               s == Vec({0, 21, 0, 41, 0, 0, 22, 0, 0, 0, 0, 0, 0, 0, 53}),
               "noiseless increments = " + Show(s));

  check.Expect("case1/storage_symbols",
               ComputeStorageComplexity(params).symbols == 90 &&
                   node.stored_symbol_count() == 90,
               "expected 15 + 3*25 = 90 stored symbols");

  Simulation sim(config);
  sim.set_gradient_source(Peaked(params, real));
  const RoundReport report = sim.RunRound();
  check.Expect("case1/end_to_end_selection", report.writes[0].real_pairs == real,
               "top-r picked " + Show(report.writes[0].real_pairs));
  check.Expect(
      "case1/end_to_end_downlink",
      report.downlink_permuted == std::vector<PermutedIndex>{{1, 1}, {3, 1}} &&
          report.downlink_real == std::vector<RealIndex>{{2, 1}, {4, 1}},
      "downlink " + Show(report.downlink_permuted) + " -> " +
          Show(report.downlink_real));
}

void CheckCase2(Checker& check) {
  const SimulationConfig config = ReferenceConfigCase2();
  const SystemParams& params = config.params;
  const PermutationSet perms = ReferencePermutationsCase2();
  const ReverserNoise zero = ZeroReverserNoise(params);
  const ReverserSet rev = BuildReverserSet(params, perms, zero, 0);

  const FieldMatrix r1 =
      Literal({{0, 0, 0, 1}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}});
  check.Expect("case2/reverser_segment1", rev.within[0] == r1,
               "noiseless R^[1] differs from the reference matrix");
  const FieldMatrix r_hat = Literal({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  check.Expect("case2/reverser_inter", *rev.inter == r_hat,
               "noiseless inter-segment reverser differs");

  const FieldMatrix combined = BlockLiteral(
      4, 3, {{0, 2}, {1, 0}, {2, 1}},
      {r1, Literal({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}),
       Literal({{0, 1, 0, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 0, 1, 0}})});
  check.Expect("case2/combined_reverser",
               MaterializeCase2Reverser(params.field, rev) == combined,
               "noiseless combined reverser differs from the reference layout");

  std::vector<RealIndex> mapped;
  for (PermutedIndex p : {PermutedIndex{1, 3}, PermutedIndex{1, 1},
                          PermutedIndex{1, 2}}) {
    mapped.push_back(PermutedToReal(p, perms, params.scheme));
  }
  check.Expect("case2/downlink_mapping",
               mapped == std::vector<RealIndex>{{2, 1}, {1, 2}, {3, 3}},
               "{(1,3),(1,1),(1,2)} maps to " + Show(mapped));

  DatabaseNode node(params, 0, StorageState{std::vector<FieldElement>(12)}, rev);
  const auto query = node.BuildReadQuery({1, 3});
  check.Expect("case2/read_query",
               query == Vec({0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}) &&
                   query == combined.column(8),
               "query for permuted (1,3) is " + Show(query));

  const std::vector<RealIndex> real = {{2, 1}, {2, 2}, {3, 3}};
  RandomStream pads(11);
  const auto tuples =
      BuildWriteTuples(SelectionOf(real, params.subpacket_size), perms, params, pads);
  const auto permuted = Positions(tuples[0]);
  check.Expect("case2/write_tuples",
               permuted == std::vector<PermutedIndex>{{1, 3}, {3, 1}, {1, 2}},
               "tuples went to " + Show(permuted));

  const std::vector<WriteTuple> sent = {{FieldElement(21), {1, 3}},
                                        {FieldElement(22), {3, 1}},
                                        {FieldElement(33), {1, 2}}};
  const auto y = AssemblePermutedUpdates(sent, params);
  check.Expect("case2/update_vector",
               y == Vec({0, 0, 22, 0, 33, 0, 0, 0, 21, 0, 0, 0}),
               "Y = " + Show(y));

  const auto placed = Case2ApplyReverser(params.field, rev, y);
  check.Expect("case2/placement",
               placed == Vec({0, 21, 0, 0, 0, 22, 0, 0, 0, 0, 33, 0}),
               "noiseless increment = " + Show(placed));

  check.Expect("case2/storage_symbols",
               ComputeStorageComplexity(params).symbols == 69 &&
                   node.stored_symbol_count() == 69,
               "expected 12 + 3*16 + 9 = 69 stored symbols");

  Simulation sim(config);
  sim.set_gradient_source(Peaked(params, real));
  const RoundReport report = sim.RunRound();
  check.Expect("case2/end_to_end_selection", report.writes[0].real_pairs == real,
               "top-r picked " + Show(report.writes[0].real_pairs));
  check.Expect("case2/end_to_end_tuples",
               report.writes[0].permuted_pairs == permuted,
               "database saw " + Show(report.writes[0].permuted_pairs));
  std::set<RealIndex> down(report.downlink_real.begin(), report.downlink_real.end());
  check.Expect("case2/end_to_end_downlink",
               down == std::set<RealIndex>(real.begin(), real.end()),
               "downlink decoded " + Show(report.downlink_real));
}

}  // namespace

PermutationSet ReferencePermutationsCase1() {
  PermutationSet p;
  p.within = {Permutation({2, 1, 4, 5, 3}), Permutation({3, 5, 2, 4, 1}),
              Permutation({5, 2, 3, 1, 4})};
  return p;
}

PermutationSet ReferencePermutationsCase2() {
  PermutationSet p;
  p.within = {Permutation({2, 4, 3, 1}), Permutation({1, 3, 2, 4}),
              Permutation({3, 1, 4, 2})};
  p.inter = Permutation({2, 3, 1});
  return p;
}

SimulationConfig ReferenceConfigCase1() {
  SimulationConfig c;
  c.params = MakeParams(Scheme::kCase1, 4, 15, 3, Rational(4, 15),
                        Rational(2, 15));
  c.users_per_round = 1;
  c.rounds = 1;
  c.seed = 1;
  c.permutations = ReferencePermutationsCase1();
  return c;
}

SimulationConfig ReferenceConfigCase2() {
  SimulationConfig c;
  c.params = MakeParams(Scheme::kCase2, 6, 12, 3, Rational(1, 4), Rational(1, 4));
  c.users_per_round = 1;
  c.rounds = 1;
  c.seed = 1;
  c.permutations = ReferencePermutationsCase2();
  return c;
}

std::vector<ExampleCheck> VerifyWorkedExamples() {
  Checker check;
  check.Run("case1", CheckCase1);
  check.Run("case2", CheckCase2);
  return check.take();
}

}  // namespace pruw
