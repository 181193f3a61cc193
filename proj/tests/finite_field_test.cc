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

#include "pruw/finite_field.h"

#include <gtest/gtest.h>

#include <vector>

#include "pruw/errors.h"

namespace pruw {
namespace {

std::vector<FieldElement> Elems(std::initializer_list<uint64_t> v) {
  std::vector<FieldElement> out;
  for (uint64_t x : v) out.emplace_back(x);
  return out;
}

TEST(PrimeFieldTest, SmallFieldArithmetic) {
  PrimeField f(7);
  EXPECT_EQ(f.mul(FieldElement(3), FieldElement(5)), FieldElement(1));
  EXPECT_EQ(f.inv(FieldElement(2)), FieldElement(4));
  EXPECT_EQ(f.pow(FieldElement(2), -1), FieldElement(4));
  EXPECT_EQ(f.pow(FieldElement(3), 0), FieldElement(1));
  EXPECT_EQ(f.pow(FieldElement(3), 6), FieldElement(1));
  EXPECT_EQ(f.sub(FieldElement(2), FieldElement(5)), FieldElement(4));
  EXPECT_EQ(f.neg(FieldElement(0)), FieldElement(0));
  EXPECT_EQ(f.from_signed(-3), FieldElement(4));
  EXPECT_EQ(f.to_signed(FieldElement(4)), -3);
  EXPECT_EQ(f.to_signed(FieldElement(3)), 3);
}

TEST(PrimeFieldTest, InverseOfZeroThrows) {
  PrimeField f(7);
  EXPECT_THROW(f.inv(FieldElement(0)), DivisionByZeroError);
  EXPECT_THROW(f.pow(FieldElement(0), -2), DivisionByZeroError);
}

TEST(PrimeFieldTest, RejectsCompositeAndOversizedModuli) {
  EXPECT_THROW(PrimeField(8), ConfigError);
  EXPECT_THROW(PrimeField(1), ConfigError);
  EXPECT_THROW(PrimeField((uint64_t{1} << 63) + 29), ConfigError);
  EXPECT_NO_THROW(PrimeField(257));
}

TEST(PrimeFieldTest, MillerRabinAgreesWithTrialDivision) {
  for (uint64_t n = 0; n < 5000; ++n) {
    bool trial = n >= 2;
    for (uint64_t d = 2; d * d <= n && trial; ++d) trial = n % d != 0;
    EXPECT_EQ(IsPrime(n), trial) << n;
  }
  EXPECT_TRUE(IsPrime(kMersenne61));
  EXPECT_FALSE(IsPrime(kMersenne61 - 2));
}

TEST(PrimeFieldTest, MersenneMulMatchesWideProduct) {
  PrimeField f;
  const FieldElement a(kMersenne61 - 1);
  // (-1)(-1) = 1
  EXPECT_EQ(f.mul(a, a), FieldElement(1));
  const FieldElement x(123456789012345ULL);
  EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
}

TEST(PrimeFieldTest, EveryNonzeroElementHasInverseExhaustive) {
  for (uint64_t q : {5, 7, 11, 257}) {
    PrimeField f(q);
    for (uint64_t a = 1; a < q; ++a) {
      EXPECT_EQ(f.mul(FieldElement(a), f.inv(FieldElement(a))), f.one());
    }
  }
}

// Forward evaluation is its own oracle: evaluate, solve, compare.
TEST(SolvePowerSystemTest, RecoversLaurentCoefficients) {
  PrimeField f(7);
  const auto alphas = Elems({1, 2, 3, 4});
  const auto coeffs = Elems({3, 1, 0, 5});
  std::vector<FieldElement> answers;
  for (auto a : alphas) answers.push_back(EvaluateLaurent(f, coeffs, -1, a));
  EXPECT_EQ(SolvePowerSystem(f, answers, alphas, -1, 2), coeffs);
}

TEST(SolvePowerSystemTest, ExhaustiveRoundTripAtQ5) {
  PrimeField f(5);
  const auto alphas = Elems({1, 2, 3});
  for (uint64_t c = 0; c < 125; ++c) {
    const auto coeffs = Elems({c % 5, c / 5 % 5, c / 25});
    std::vector<FieldElement> answers;
    for (auto a : alphas) answers.push_back(EvaluateLaurent(f, coeffs, -1, a));
    ASSERT_EQ(SolvePowerSystem(f, answers, alphas, -1, 1), coeffs);
  }
}

TEST(SolvePowerSystemTest, ZeroAnswersGiveZeroCoefficients) {
  PrimeField f(11);
  const auto alphas = Elems({1, 2, 3, 4, 5, 6});
  const std::vector<FieldElement> zeros(6);
  EXPECT_EQ(SolvePowerSystem(f, zeros, alphas, -1, 4), zeros);
}

TEST(SolvePowerSystemTest, CaseOneWindowIsSolvableWithThreeEllPlusOne) {
  PrimeField f;
  for (int64_t ell = 1; ell <= 4; ++ell) {
    const size_t n = 3 * ell + 1;
    std::vector<FieldElement> alphas, coeffs;
    for (size_t i = 0; i < n; ++i) {
      alphas.emplace_back(i + 1);
      coeffs.emplace_back(1000 + 17 * i);
    }
    std::vector<FieldElement> answers;
    for (auto a : alphas) answers.push_back(EvaluateLaurent(f, coeffs, -ell, a));
    EXPECT_EQ(SolvePowerSystem(f, answers, alphas, -ell, 2 * ell), coeffs);
  }
}

TEST(SolvePowerSystemTest, ErrorKinds) {
  PrimeField f(7);
  const auto four = Elems({1, 2, 3, 4});
  const auto ans4 = Elems({0, 0, 0, 0});
  // Too few evaluation points for the window.
  EXPECT_THROW(SolvePowerSystem(f, Elems({0, 0, 0}), Elems({1, 2, 3}), -1, 2),
               UnderdeterminedError);
  // Too many.
  EXPECT_THROW(SolvePowerSystem(f, ans4, four, -1, 1), DimensionError);
  // Answers and points disagree in length.
  EXPECT_THROW(SolvePowerSystem(f, Elems({0, 0, 0}), four, -1, 2),
               DimensionError);
  // Duplicate evaluation point.
  EXPECT_THROW(SolvePowerSystem(f, ans4, Elems({1, 2, 2, 4}), -1, 2),
               SingularMatrixError);
}

TEST(SolveLinearSystemTest, SolvesAndDetectsSingular) {
  PrimeField f(11);
  FieldMatrix a(2, 2);
  a.at(0, 0) = FieldElement(2);
  a.at(0, 1) = FieldElement(3);
  a.at(1, 0) = FieldElement(1);
  a.at(1, 1) = FieldElement(4);
  const auto x = Elems({5, 7});
  const auto b = Multiply(f, a, x);
  EXPECT_EQ(SolveLinearSystem(f, a, b), x);
  EXPECT_EQ(Rank(f, a), 2u);

  a.at(1, 0) = FieldElement(4);
  a.at(1, 1) = FieldElement(6);  // second row = 2 * first row
  EXPECT_EQ(Rank(f, a), 1u);
  EXPECT_THROW(SolveLinearSystem(f, a, b), SingularMatrixError);
}

TEST(EvaluationPointsTest, Validation) {
  PrimeField f(7);
  EXPECT_EQ(EvaluationPoints::Default(f, 4).size(), 4u);
  EXPECT_THROW(EvaluationPoints(f, Elems({1, 1})), ConfigError);
  EXPECT_THROW(EvaluationPoints(f, Elems({0, 1})), ConfigError);
  EXPECT_THROW(EvaluationPoints(f, Elems({1, 9})), ConfigError);
  EXPECT_THROW(EvaluationPoints::Default(f, 7), ConfigError);
}

}  // namespace
}  // namespace pruw
