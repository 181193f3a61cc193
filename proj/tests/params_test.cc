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

#include "pruw/params.h"

#include <gtest/gtest.h>

#include "pruw/errors.h"

namespace pruw {
namespace {

TEST(SubpacketizationTest, FromDatabaseCount) {
  EXPECT_EQ(Subpacketization(7, Scheme::kCase1), 2u);
  EXPECT_EQ(Subpacketization(4, Scheme::kCase1), 1u);
  EXPECT_EQ(Subpacketization(11, Scheme::kCase2), 2u);
  EXPECT_EQ(Subpacketization(6, Scheme::kCase2), 1u);
}

TEST(SubpacketizationTest, CongruenceFailureNamesTheRule) {
  try {
    Subpacketization(5, Scheme::kCase1);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(Subpacketization(7, Scheme::kCase2), ConfigError);
  EXPECT_THROW(Subpacketization(1, Scheme::kCase1), ConfigError);
}

TEST(MakeParamsTest, DerivedQuantities) {
  auto p = MakeParams(Scheme::kCase1, 7, 12, 3, Rational(1, 4), Rational(1, 6));
  EXPECT_EQ(p.subpacket_size, 2u);
  EXPECT_EQ(p.model_size(), 24u);
  EXPECT_EQ(p.segment_size(), 4u);
  EXPECT_EQ(p.uplink_count(), 3u);
  EXPECT_EQ(p.downlink_count(), 2u);
  EXPECT_EQ(p.storage_noise_degree(), 2);
  EXPECT_EQ(p.answer_degree(), 4);

  auto q = MakeParams(Scheme::kCase2, 11, 12, 3, Rational(1, 4), Rational(1, 4));
  EXPECT_EQ(q.storage_noise_degree(), 4);
  EXPECT_EQ(q.answer_degree(), 8);
}

TEST(MakeParamsTest, Validation) {
  EXPECT_THROW(MakeParams(Scheme::kCase1, 4, 12, 5, Rational(1, 4),
                          Rational(1, 4)),
               ConfigError);  // B does not divide P
  EXPECT_THROW(MakeParams(Scheme::kCase1, 4, 12, 3, Rational(1, 5),
                          Rational(1, 4)),
               ConfigError);  // P r not an integer
  EXPECT_THROW(MakeParams(Scheme::kCase1, 4, 12, 3, Rational(5, 4),
                          Rational(1, 4)),
               ConfigError);  // r > 1
  EXPECT_THROW(MakeParams(Scheme::kCase1, 4, 12, 3, Rational(1, 4),
                          Rational(1, 4), 8),
               ConfigError);  // composite modulus
  EXPECT_THROW(MakeParams(Scheme::kCase1, 4, 12, 3, Rational(1, 4),
                          Rational(1, 4), 3),
               ConfigError);  // q <= N
  EXPECT_NO_THROW(MakeParams(Scheme::kCase1, 4, 12, 3, Rational(0),
                             Rational(0)));
}

TEST(RationalTest, ParseAndFormat) {
  EXPECT_EQ(ParseRational("3/12"), Rational(1, 4));
  EXPECT_EQ(ParseRational("2"), Rational(2));
  EXPECT_EQ(ParseRational("0.25"), Rational(1, 4));
  EXPECT_EQ(ToString(Rational(6, 4)), "3/2");
  EXPECT_EQ(ToString(Rational(2)), "2");
  EXPECT_THROW(ParseRational("x/2"), ConfigError);
  EXPECT_THROW(ParseRational("1/0"), ConfigError);
}

TEST(SchemeTest, ParseAndFormat) {
  EXPECT_EQ(ParseScheme("case1"), Scheme::kCase1);
  EXPECT_EQ(ParseScheme("2"), Scheme::kCase2);
  EXPECT_EQ(ToString(Scheme::kCase2), "case2");
  EXPECT_THROW(ParseScheme("case3"), ConfigError);
}

}  // namespace
}  // namespace pruw
