// Copyright 2026 The bqsdc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "bqsdc/analysis.hpp"

namespace bqsdc {
namespace {

constexpr double kTol = 1e-12;

TEST(Entropy, Examples) {
  EXPECT_NEAR(shannon_entropy(ComboDistribution::uniform()), 6.0, kTol);
  EXPECT_NEAR(shannon_entropy(ComboDistribution::point(OpLabel(3), OpLabel(5))), 0.0, kTol);
  std::array<double, 64> p{};
  for (std::size_t i = 0; i < 8; ++i) p[i * 8] = 1.0 / 8;
  EXPECT_NEAR(shannon_entropy(ComboDistribution::from(p)), 3.0, kTol);
}

TEST(Entropy, RejectsBadDistributions) {
  std::array<double, 64> p{};
  EXPECT_THROW(ComboDistribution::from(p), std::invalid_argument);
  p[0] = 1.5;
  p[1] = -0.5;
  EXPECT_THROW(ComboDistribution::from(p), std::invalid_argument);
}

TEST(ConditionalEntropy, UniformPriorLeavesThreeBits) {
  EXPECT_NEAR(conditional_entropy_given_announcement(ComboDistribution::uniform()), 3.0, kTol);
}

TEST(ConditionalEntropy, PointPriorIsZero) {
  EXPECT_NEAR(conditional_entropy_given_announcement(ComboDistribution::point(OpLabel(0), OpLabel(7))), 0.0, kTol);
}

TEST(ConditionalEntropy, NeverExceedsPriorEntropy) {
  Rng rng(5, 0);
  for (int trial = 0; trial < 50; ++trial) {
    std::array<double, 64> w{};
    double total = 0.0;
    for (double& x : w) total += (x = rng.uniform() * (rng.below(4) == 0 ? 0.0 : 1.0));
    for (double& x : w) x /= total;
    const auto d = ComboDistribution::from(w);
    EXPECT_LE(conditional_entropy_given_announcement(d), shannon_entropy(d) + 1e-9);
    EXPECT_GE(conditional_entropy_given_announcement(d), -1e-12);
  }
}

// With p uniform the announcement depends on a and b only through a XOR b, so
// the uniform-prior leakage is exactly the 3 bits carried by that XOR.
TEST(Leakage, ReportIdentityAndFlag) {
  const LeakageReport r = leakage_report(ComboDistribution::uniform());
  EXPECT_NEAR(r.entropy_bits, 6.0, kTol);
  EXPECT_NEAR(r.conditional_entropy_bits, 3.0, kTol);
  EXPECT_NEAR(r.mutual_information_bits, r.entropy_bits - r.conditional_entropy_bits, kTol);
  EXPECT_NEAR(r.mutual_information_bits, 3.0, kTol);
  EXPECT_EQ(r.reference_entropy_bits, 6.0);
  EXPECT_EQ(r.claimed_leakage_bits, 0.0);
  EXPECT_TRUE(r.discrepancy);

  const LeakageReport none = leakage_report(ComboDistribution::point(OpLabel(1), OpLabel(1)));
  EXPECT_NEAR(none.mutual_information_bits, 0.0, kTol);
  EXPECT_FALSE(none.discrepancy);
}

TEST(Leakage, EmpiricalMatchesEnumeration) {
  SessionConfig cfg;
  cfg.groups = 10000;
  cfg.seed = 2024;
  cfg.decoys_step1 = cfg.decoys_step3 = cfg.decoys_step5 = 0;
  Rng rng(cfg.seed, Session::kMessages);
  const auto alice = random_messages(cfg.groups, rng);
  const auto bob = random_messages(cfg.groups, rng);
  const SessionTranscript t = run_session(cfg, alice, bob);
  ASSERT_FALSE(t.aborted());
  const EmpiricalLeakage e = empirical_leakage(t.groups);
  EXPECT_EQ(e.samples, cfg.groups);
  EXPECT_EQ(e.inconsistent_pairs, 0u);
  const LeakageReport exact = leakage_report(ComboDistribution::uniform());
  EXPECT_NEAR(e.conditional_entropy_bits, exact.conditional_entropy_bits, 0.02 * exact.conditional_entropy_bits);
  EXPECT_NEAR(e.entropy_bits, exact.entropy_bits, 0.02 * exact.entropy_bits);
  double total = 0.0;
  for (double f : e.announcement_frequency) {
    EXPECT_NEAR(f, 0.125, 0.015);
    total += f;
  }
  EXPECT_NEAR(total, 1.0, 1e-9);
}

TEST(Leakage, EmptyTranscript) {
  const EmpiricalLeakage e = empirical_leakage({});
  EXPECT_EQ(e.samples, 0u);
  EXPECT_EQ(e.entropy_bits, 0.0);
}

TEST(Efficiency, Examples) {
  EXPECT_NEAR(cabello_efficiency(kThisProtocolAccounting), 2.0 / 3.0, kTol);
  EXPECT_NEAR(cabello_efficiency({3, 3, 1}), 0.75, kTol);
  EXPECT_NEAR(cabello_efficiency({4, 4, 2}), 2.0 / 3.0, kTol);
  EXPECT_NEAR(cabello_efficiency({2, 2, 1}), 2.0 / 3.0, kTol);
  EXPECT_EQ(kBitsPerGroup, 6u);
  EXPECT_LE(bits_per_qubit(kThisProtocolAccounting), 1.0);
  EXPECT_THROW(cabello_efficiency({1, 0, 0}), std::invalid_argument);
  EXPECT_THROW(cabello_efficiency({-1, 2, 2}), std::invalid_argument);
}

TEST(Comparison, Rows) {
  const auto rows = comparison_report();
  ASSERT_EQ(rows.size(), 8u);
  auto find = [&](int ref) -> const ComparisonRow& {
    for (const auto& r : rows) {
      for (int x : r.refs) {
        if (x == ref) return r;
      }
    }
    throw std::out_of_range("no row");
  };
  EXPECT_EQ(find(24).bits_per_round, 3);
  EXPECT_EQ(find(24).bits_leaked, 2);
  EXPECT_EQ(find(32).bits_per_round, 2);
  EXPECT_EQ(find(32).bits_leaked, 0);
  EXPECT_EQ(find(15).bits_per_round, 4);
  EXPECT_EQ(find(20).bits_leaked, 3);
  EXPECT_EQ(find(22).bits_per_round, 2);
  EXPECT_NEAR(*find(33).efficiency(), 0.75, kTol);
  EXPECT_FALSE(find(24).efficiency());

  const ComparisonRow& self = rows.back();
  EXPECT_TRUE(self.refs.empty());
  EXPECT_EQ(self.bits_per_round, 6);
  EXPECT_EQ(self.bits_leaked, 0);
  EXPECT_TRUE(self.leakage_claimed);
  for (const auto& r : rows) EXPECT_LE(r.bits_per_round, self.bits_per_round);
}

}  // namespace
}  // namespace bqsdc
