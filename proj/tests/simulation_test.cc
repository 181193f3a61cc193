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

#include "pruw/simulation.h"

#include <gtest/gtest.h>

#include "pruw/errors.h"
#include "pruw/leakage.h"
#include "pruw/worked_examples.h"

namespace pruw {
namespace {

using E = FieldElement;

SimulationConfig SmallConfig(Scheme s, size_t users, size_t rounds,
                             uint64_t seed) {
  SimulationConfig c;
  c.params = s == Scheme::kCase1
                 ? MakeParams(s, 4, 16, 4, Rational(1, 8), Rational(1, 4))
                 : MakeParams(s, 6, 12, 3, Rational(1, 4), Rational(1, 4));
  c.users_per_round = users;
  c.rounds = rounds;
  c.seed = seed;
  return c;
}

std::string Dump(const std::vector<RoundReport>& reports) {
  std::string out;
  for (const auto& r : reports) out += RoundReportToJson(r).dump() + "\n";
  return out;
}

TEST(SimulationTest, ReferenceConfigurationsRunClean) {
  for (auto config : {ReferenceConfigCase1(), ReferenceConfigCase2()}) {
    config.rounds = 3;
    config.users_per_round = 2;
    Simulation sim(config);
    const auto reports = sim.Run();
    EXPECT_EQ(sim.permutations(), *config.permutations);
    for (const auto& r : reports) {
      EXPECT_EQ(r.model_checks, config.params.num_subpackets);
      EXPECT_EQ(r.read_checks, 2 * config.params.downlink_count());
    }
    EXPECT_NO_THROW(sim.VerifyModel());
  }
}

TEST(SimulationTest, SameSeedSameReports) {
  for (Scheme s : {Scheme::kCase1, Scheme::kCase2}) {
    Simulation a(SmallConfig(s, 3, 3, 42)), b(SmallConfig(s, 3, 3, 42));
    EXPECT_EQ(Dump(a.Run()), Dump(b.Run()));
    EXPECT_EQ(a.permutations(), b.permutations());
    for (size_t n = 0; n < a.nodes().size(); ++n) {
      EXPECT_EQ(a.nodes()[n].storage(), b.nodes()[n].storage());
    }
    Simulation c(SmallConfig(s, 3, 3, 43));
    EXPECT_NE(Dump(c.Run()), Dump(Simulation(SmallConfig(s, 3, 3, 42)).Run()));
  }
}

TEST(SimulationTest, SingleUserReadsBackItsOwnWrite) {
  for (Scheme s : {Scheme::kCase1, Scheme::kCase2}) {
    auto config = SmallConfig(s, 1, 1, 5);
    config.params = s == Scheme::kCase1
                        ? MakeParams(s, 4, 16, 4, Rational(1, 4), Rational(1, 4))
                        : MakeParams(s, 6, 12, 3, Rational(1, 4), Rational(1, 4));
    Simulation sim(config);
    const ShadowModel before = sim.shadow();
    const auto r = sim.RunRound();
    auto downlink = r.downlink_real;
    std::sort(downlink.begin(), downlink.end(),
              [&](RealIndex a, RealIndex b) {
                return GlobalSubpacket(a, config.params) <
                       GlobalSubpacket(b, config.params);
              });
    EXPECT_EQ(downlink, r.writes[0].real_pairs);
    for (size_t k = 0; k < downlink.size(); ++k) {
      const size_t g = GlobalSubpacket(downlink[k], config.params) - 1;
      EXPECT_EQ(sim.ReadSubpacket(downlink[k]), sim.shadow()[g]);
      SubpacketPlain expect = before[g];
      for (size_t i = 0; i < expect.size(); ++i) {
        expect[i] = config.params.field.add(expect[i], r.writes[0].deltas[k][i]);
      }
      EXPECT_EQ(sim.shadow()[g], expect);
    }
  }
}

TEST(SimulationTest, ZeroUpdateLeavesModelUnchanged) {
  auto config = SmallConfig(Scheme::kCase2, 2, 2, 9);
  Simulation sim(config);
  sim.set_gradient_source([&](size_t, size_t) {
    return PseudoGradients(config.params.num_subpackets,
                           std::vector<double>(config.params.subpacket_size));
  });
  const ShadowModel before = sim.shadow();
  sim.Run();
  EXPECT_EQ(sim.shadow(), before);
  for (size_t g = 1; g <= config.params.num_subpackets; ++g) {
    EXPECT_EQ(sim.ReadSubpacket(RealIndexOf(g, config.params)),
              before[g - 1]);
  }
}

TEST(SimulationTest, OverlappingUsersAccumulate) {
  auto config = SmallConfig(Scheme::kCase1, 3, 1, 2);
  Simulation sim(config);
  // Every user pushes the same subpackets, each with value user * 0.5.
  sim.set_gradient_source([&](size_t, size_t user) {
    PseudoGradients g(config.params.num_subpackets,
                      std::vector<double>(config.params.subpacket_size));
    g[4][0] = 0.5 * user;
    g[9][0] = -0.5 * user;
    return g;
  });
  const ShadowModel before = sim.shadow();
  const auto r = sim.RunRound();
  const PrimeField& f = config.params.field;
  const E total = f.from_signed(static_cast<int64_t>(3 * 65536));  // 0.5 * (1+2+3)
  EXPECT_EQ(sim.shadow()[4][0], f.add(before[4][0], total));
  EXPECT_EQ(sim.shadow()[9][0], f.sub(before[9][0], total));
  EXPECT_EQ(sim.ReadSubpacket(RealIndexOf(5, config.params)), sim.shadow()[4]);
  EXPECT_EQ(r.histogram.total(), 3 * config.params.uplink_count());
}

TEST(SimulationTest, CoordinatorProvisioningShape) {
  auto config = SmallConfig(Scheme::kCase2, 1, 1, 3);
  const auto prov = CoordinatorInit(config);
  EXPECT_EQ(prov.reversers.size(), 6u);
  EXPECT_EQ(prov.storage.size(), 6u);
  EXPECT_EQ(prov.shadow.size(), 12u);
  ASSERT_TRUE(prov.permutations.inter.has_value());
  // The noise is shared up to the alpha^ell scale, so reversers differ.
  EXPECT_NE(prov.reversers[0], prov.reversers[1]);
}

TEST(SimulationConfigTest, ParseAndRoundTrip) {
  const auto j = nlohmann::json::parse(R"({
    "scheme": "case2", "N": 11, "P": 12, "B": 4, "r": "1/4", "r_prime": 0.5,
    "users_per_round": 2, "rounds": 4, "seed": 77, "q": 257,
    "score_distribution": "uniform", "quantization_scale": 16
  })");
  const auto c = ParseSimulationConfig(j);
  EXPECT_EQ(c.params.subpacket_size, 2u);
  EXPECT_EQ(c.params.downlink_rate, Rational(1, 2));
  EXPECT_EQ(c.params.field.modulus(), 257u);
  EXPECT_EQ(c.score_distribution, ScoreDistribution::kUniform);
  const auto again = ParseSimulationConfig(SimulationConfigToJson(c));
  EXPECT_EQ(SimulationConfigToJson(again), SimulationConfigToJson(c));
}

TEST(SimulationConfigTest, RejectsBadInput) {
  auto base = nlohmann::json::parse(
      R"({"scheme": "case1", "N": 4, "P": 12, "B": 3, "r": "1/4", "r_prime": "1/4",
          "users_per_round": 1, "rounds": 1})");
  EXPECT_NO_THROW(ParseSimulationConfig(base));
  for (const auto& [key, value] :
       std::vector<std::pair<std::string, nlohmann::json>>{
           {"N", 5}, {"B", 5}, {"r", "1/5"}, {"bogus", 1}, {"scheme", "case9"},
           {"q", 12}, {"score_distribution", "normal"}}) {
    auto j = base;
    j[key] = value;
    EXPECT_THROW(ParseSimulationConfig(j), ConfigError) << key;
  }
  auto missing = base;
  missing.erase("P");
  EXPECT_THROW(ParseSimulationConfig(missing), ConfigError);
}

// With uniform scores, the per-segment counts one database observes follow
// the multivariate hypergeometric law. Ten outcomes give nine degrees of
// freedom, critical value 27.88 at the 0.001 level.
TEST(SimulationTest, ObservedSegmentCountsMatchHypergeometric) {
  SimulationConfig c;
  c.params = MakeParams(Scheme::kCase1, 4, 12, 3, Rational(1, 4), Rational(1, 4));
  c.users_per_round = 10;
  c.rounds = 1000;
  c.seed = 2026;
  c.score_distribution = ScoreDistribution::kUniform;
  Simulation sim(c);
  sim.set_full_model_check(false);
  std::map<leakage::CountVector, size_t> observed;
  size_t samples = 0;
  for (size_t t = 0; t < c.rounds; ++t) {
    const auto r = sim.RunRound();
    for (const auto& w : r.writes) {
      leakage::CountVector counts(3, 0);
      for (const auto& p : w.permuted_pairs) counts[p.segment - 1]++;
      observed[counts]++;
      ++samples;
    }
  }
  ASSERT_GE(samples, 10000u);
  const auto pmf = leakage::PmfHat(12, 3, 3);
  ASSERT_EQ(pmf.size(), 10u);
  double chi2 = 0;
  for (const auto& [counts, prob] : pmf) {
    const double expected = static_cast<double>(prob) * samples;
    const double o = observed.count(counts) ? observed[counts] : 0.0;
    chi2 += (o - expected) * (o - expected) / expected;
  }
  EXPECT_LT(chi2, 27.88);
  EXPECT_NO_THROW(sim.VerifyModel());
}

}  // namespace
}  // namespace pruw
