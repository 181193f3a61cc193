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

#include "pruw/coded_storage.h"

#include <gtest/gtest.h>

#include "pruw/errors.h"
#include "pruw/params.h"
#include "pruw/random.h"

namespace pruw {
namespace {

using E = FieldElement;

TEST(EncodeSubpacketTest, TermByTerm) {
  PrimeField f(7);
  const std::vector<E> w = {E(3)}, z = {E(1), E(5)};
  // 4*3 + 1 + 2*5 = 23 = 2 mod 7, since 2^-1 = 4.
  EXPECT_EQ(EncodeSubpacket(f, w, z, E(2), 1), E(2));
}

TEST(EncodeSubpacketTest, ZeroInputsAndZeroNoise) {
  PrimeField f(11);
  const std::vector<E> w0 = {E(0), E(0)}, z0 = {E(0), E(0), E(0)};
  EXPECT_EQ(EncodeSubpacket(f, w0, z0, E(3), 2), E(0));
  // Pure share: 3^-1 * 4 + 3^-2 * 6 with 3^-1 = 4 mod 11.
  const std::vector<E> w = {E(4), E(6)};
  EXPECT_EQ(EncodeSubpacket(f, w, z0, E(3), 2),
            f.add(f.mul(E(4), E(4)), f.mul(E(5), E(6))));
}

TEST(EncodeSubpacketTest, NoiseLengthMismatchThrows) {
  PrimeField f(7);
  const std::vector<E> w = {E(3)}, z = {E(1)};
  EXPECT_THROW(EncodeSubpacket(f, w, z, E(2), 1), DimensionError);
}

TEST(InitStorageTest, RoundTripThroughDecoder) {
  // P=2, ell=1, N=4: each database holds two symbols.
  auto params = MakeParams(Scheme::kCase1, 4, 2, 1, Rational(1, 2),
                           Rational(1, 2));
  const std::vector<SubpacketPlain> model = {{E(42)}, {E(7)}};
  RandomStream rng(5);
  const auto storage = InitStorage(model, params, rng);
  ASSERT_EQ(storage.size(), 4u);
  for (size_t s = 0; s < 2; ++s) {
    std::vector<E> answers;
    for (const auto& st : storage) {
      ASSERT_EQ(st.symbols.size(), 2u);
      answers.push_back(st.symbols[s]);
    }
    EXPECT_EQ(DecodeReadAnswers(answers, params), model[s]);
  }
}

TEST(InitStorageTest, ZeroModelZeroNoiseIsZeroStorage) {
  auto params = MakeParams(Scheme::kCase1, 7, 4, 2, Rational(1, 2),
                           Rational(1, 2), 257);
  const std::vector<SubpacketPlain> model(4, SubpacketPlain(2));
  const std::vector<E> zero_noise(3);
  for (size_t n = 0; n < 7; ++n) {
    EXPECT_EQ(EncodeSubpacket(params.field, model[0], zero_noise,
                              params.alphas[n], 2),
              E(0));
  }
}

TEST(DecodeReadAnswersTest, ZeroAnswersAndCaseTwoWindow) {
  auto p1 = MakeParams(Scheme::kCase1, 7, 4, 2, Rational(1, 2), Rational(1, 2));
  EXPECT_EQ(DecodeReadAnswers(std::vector<E>(7), p1), SubpacketPlain(2));

  // Case2, N=6, ell=1: exponents -1..4 give six unknowns.
  auto p2 = MakeParams(Scheme::kCase2, 6, 12, 3, Rational(1, 4),
                       Rational(1, 4));
  std::vector<E> coeffs = {E(9), E(1), E(2), E(3), E(4), E(5)};
  std::vector<E> answers;
  for (size_t n = 0; n < 6; ++n) {
    answers.push_back(EvaluateLaurent(p2.field, coeffs, -1, p2.alphas[n]));
  }
  EXPECT_EQ(DecodeReadAnswers(answers, p2), SubpacketPlain{E(9)});
}

TEST(DecodeReadAnswersTest, FewerThanNAnswersIsUnderdetermined) {
  for (Scheme s : {Scheme::kCase1, Scheme::kCase2}) {
    for (size_t ell : {1, 2}) {
      const size_t n = (s == Scheme::kCase1 ? 3 : 5) * ell + 1;
      auto p = MakeParams(s, n, 12, 3, Rational(1, 4), Rational(1, 4));
      EXPECT_THROW(DecodeReadAnswers(std::vector<E>(n - 1), p),
                   UnderdeterminedError);
      EXPECT_THROW(
          DecodeReadAnswers(std::vector<E>(n - 1),
                            p.alphas.values().first(n - 1), p),
          UnderdeterminedError);
    }
  }
}

TEST(StorageSnapshotTest, BinaryAndJsonRoundTrip) {
  PrimeField f(257);
  StorageState st{{E(1), E(256), E(0), E(77)}};
  const std::string bytes = SerializeStorageBinary(st, f);
  EXPECT_EQ(bytes.size(), 40u);
  EXPECT_EQ(DeserializeStorageBinary(bytes, f), st);
  EXPECT_THROW(DeserializeStorageBinary(bytes, PrimeField(11)), ConfigError);
  EXPECT_THROW(DeserializeStorageBinary(bytes.substr(0, 13), f),
               DimensionError);
  EXPECT_EQ(StorageFromJson(StorageToJson(st, f), f), st);
}

TEST(StorageStateTest, SegmentView) {
  StorageState st{{E(1), E(2), E(3), E(4), E(5), E(6)}};
  auto seg2 = st.segment(2, 3);
  EXPECT_EQ(seg2[0], E(4));
  EXPECT_THROW(st.segment(0, 3), IndexError);
  EXPECT_THROW(st.segment(3, 3), IndexError);
}

}  // namespace
}  // namespace pruw
