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

// Exhaustive one-time-pad certificates over F_5. Each test enumerates every
// pad value and checks that the observed distribution is exactly uniform
// and does not depend on the secret.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "pruw/client.h"
#include "pruw/coded_storage.h"
#include "pruw/permutations.h"

namespace pruw {
namespace {

using E = FieldElement;
constexpr uint64_t kQ = 5;

// Calls fn for every vector in F_q^len.
template <typename Fn>
void ForEachVector(size_t len, Fn fn) {
  std::vector<E> v(len);
  while (true) {
    fn(v);
    size_t i = 0;
    while (i < len && v[i].value == kQ - 1) v[i++] = E(0);
    if (i == len) return;
    v[i] = E(v[i].value + 1);
  }
}

TEST(PrivacyTest, CombinedUpdateIsUniformForEveryDelta) {
  PrimeField f(kQ);
  for (size_t ell : {1, 2}) {
    ForEachVector(ell, [&](const std::vector<E>& delta) {
      for (uint64_t a = 1; a < kQ; ++a) {
        std::map<uint64_t, size_t> hist;
        for (uint64_t z = 0; z < kQ; ++z) {
          hist[CombineUpdate(f, delta, E(a), E(z)).value]++;
        }
        ASSERT_EQ(hist.size(), kQ);
        for (const auto& [v, c] : hist) ASSERT_EQ(c, 1u);
      }
    });
  }
}

// A database sees P r tuples from one user. With independent pads per
// tuple, the joint view of two tuples is uniform on F_q^2 for every pair of
// deltas.
TEST(PrivacyTest, JointViewOfTwoTuplesIsUniform) {
  PrimeField f(kQ);
  ForEachVector(2, [&](const std::vector<E>& deltas) {
    std::map<std::pair<uint64_t, uint64_t>, size_t> hist;
    ForEachVector(2, [&](const std::vector<E>& z) {
      const E u1 = CombineUpdate(f, std::vector<E>{deltas[0]}, E(3), z[0]);
      const E u2 = CombineUpdate(f, std::vector<E>{deltas[1]}, E(3), z[1]);
      hist[{u1.value, u2.value}]++;
    });
    ASSERT_EQ(hist.size(), kQ * kQ);
    for (const auto& [v, c] : hist) ASSERT_EQ(c, 1u);
  });
}

TEST(PrivacyTest, StoredSymbolIsUniformForEveryModel) {
  PrimeField f(kQ);
  // ell = 1 with noise degree 1 (first scheme) and 2 (second scheme).
  for (int64_t x : {1, 2}) {
    const size_t pads = static_cast<size_t>(std::pow(kQ, x + 1));
    for (uint64_t w = 0; w < kQ; ++w) {
      for (uint64_t a = 1; a < kQ; ++a) {
        std::map<uint64_t, size_t> hist;
        ForEachVector(static_cast<size_t>(x) + 1, [&](const std::vector<E>& z) {
          hist[EncodeSubpacket(f, std::vector<E>{E(w)}, z, E(a), x).value]++;
        });
        ASSERT_EQ(hist.size(), kQ);
        for (const auto& [v, c] : hist) ASSERT_EQ(c, pads / kQ);
      }
    }
  }
}

// Every reverser matrix is padded independently, so certifying one padded
// matrix per permutation certifies the whole set. At m=2 all q^4 matrices
// appear exactly once for both permutations and every alpha and ell.
TEST(PrivacyTest, ReverserIsIndependentOfPermutation) {
  PrimeField f(kQ);
  for (size_t ell : {1, 2}) {
    for (uint64_t a = 1; a < kQ; ++a) {
      std::set<std::vector<uint64_t>> per_perm[2];
      int idx = 0;
      for (const auto& perm : {Permutation({1, 2}), Permutation({2, 1})}) {
        ForEachVector(4, [&](const std::vector<E>& pad) {
          FieldMatrix noise(2, 2);
          std::copy(pad.begin(), pad.end(), noise.data().begin());
          const FieldMatrix r = BuildReverser(f, perm, E(a), ell, noise);
          std::vector<uint64_t> key;
          for (E e : r.data()) key.push_back(e.value);
          per_perm[idx].insert(key);
        });
        ASSERT_EQ(per_perm[idx].size(), kQ * kQ * kQ * kQ);
        ++idx;
      }
      EXPECT_EQ(per_perm[0], per_perm[1]);
    }
  }
}

std::vector<PermutationSet> AllPermutationSets(bool with_inter) {
  const std::vector<Permutation> s2 = {Permutation({1, 2}), Permutation({2, 1})};
  std::vector<PermutationSet> out;
  for (const auto& p1 : s2) {
    for (const auto& p2 : s2) {
      if (!with_inter) {
        out.push_back({{p1, p2}, std::nullopt});
        continue;
      }
      for (const auto& ph : s2) out.push_back({{p1, p2}, ph});
    }
  }
  return out;
}

using View = std::map<std::set<PermutedIndex>, size_t>;

// Observed permuted index sets of one real selection, over all permutation
// sets.
View ObservedDistribution(const std::vector<RealIndex>& real, Scheme s) {
  View view;
  for (const auto& perms : AllPermutationSets(s == Scheme::kCase2)) {
    std::set<PermutedIndex> seen;
    for (const auto& r : real) seen.insert(RealToPermuted(r, perms, s));
    view[seen]++;
  }
  return view;
}

// P=4, B=2, Pr=2: every two-subset of the four real positions, grouped by
// the statistic the database is allowed to learn. Within a group the views
// must coincide exactly; across groups they must differ, which shows the
// statistic is the full leakage.
TEST(PrivacyTest, IndexViewDependsOnlyOnSegmentCounts) {
  std::vector<RealIndex> all = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
  for (Scheme s : {Scheme::kCase1, Scheme::kCase2}) {
    std::map<std::vector<size_t>, std::vector<View>> groups;
    for (size_t a = 0; a < 4; ++a) {
      for (size_t b = a + 1; b < 4; ++b) {
        const std::vector<RealIndex> sel = {all[a], all[b]};
        std::vector<size_t> counts(2, 0);
        for (const auto& r : sel) counts[r.segment - 1]++;
        if (s == Scheme::kCase2) {
          std::sort(counts.begin(), counts.end(), std::greater<>());
        }
        groups[counts].push_back(ObservedDistribution(sel, s));
      }
    }
    EXPECT_EQ(groups.size(), s == Scheme::kCase1 ? 3u : 2u);
    std::set<View> representatives;
    for (const auto& [counts, views] : groups) {
      for (const auto& v : views) EXPECT_EQ(v, views.front()) << ToString(s);
      representatives.insert(views.front());
    }
    EXPECT_EQ(representatives.size(), groups.size());
  }
}

}  // namespace
}  // namespace pruw
