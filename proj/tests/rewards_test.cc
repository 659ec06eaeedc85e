// Copyright 2026 The edgemarket Authors
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

#include <vector>

#include "edgemarket/market/types.h"
#include "edgemarket/oracles/reward_oracle.h"
#include "edgemarket/rewards/objectives.h"
#include "edgemarket/rewards/preference.h"
#include "edgemarket/rewards/valuation.h"
#include "gtest/gtest.h"

namespace edgemarket::rewards {
namespace {

TEST(UtilityTest, HandEvaluatedExamples) {
  auto r = oracles::CheckRewardExamples();
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(UtilityTest, ExactlyOneTermIsActive) {
  PreferenceVector w = PreferenceVector::FromDraws(0.3, 0.6, 0.2);
  const BidUtilityTerms base{.valuation = 4, .payment = 1, .loss_cost = 4,
                             .backoff_cost = 0.5};
  BidUtilityTerms win = base, lose = base, back = base;
  win.alpha = 1;
  win.won = 1;
  lose.alpha = 1;
  back.alpha = 0;
  EXPECT_DOUBLE_EQ(AuctionUtility(win, w), 3.0);
  EXPECT_DOUBLE_EQ(AuctionUtility(lose, w), -0.2 * 4);
  EXPECT_DOUBLE_EQ(AuctionUtility(back, w), -0.8 * 0.5);
  std::vector<BidUtilityTerms> all{win, lose, back};
  EXPECT_DOUBLE_EQ(UtilityObjective(all, w), 3.0 - 0.8 - 0.4);
}

TEST(ScalarizationTest, LongTermPartOnly) {
  PreferenceVector w;
  EXPECT_DOUBLE_EQ(LongTermReward(0.2, 0.9, w), 0.35);
}

TEST(JainTest, Properties) {
  auto r = oracles::CheckJainProperties(2000, 5);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(JainTest, AllZeroIsOne) {
  std::vector<double> zero(4, 0.0);
  EXPECT_DOUBLE_EQ(JainFairness(zero), 1.0);
  EXPECT_THROW(JainFairness(std::vector<double>{}), std::invalid_argument);
}

TEST(JainTest, OracleCatchesWrongFormula) {
  auto r = oracles::CheckJainProperties(
      500, 5, [](std::span<const double> p) {
        double s = 0, q = 0;
        for (double x : p) {
          s += x;
          q += x * x;
        }
        return s * s / q;  // missing the 1/|M| factor
      });
  EXPECT_FALSE(r.passed);
}

TEST(PaymentWindowTest, DropsOldEntries) {
  PaymentWindow w(3, 100);
  w.Record(0, 0, 6);
  w.Record(50, 1, 3);
  EXPECT_EQ(w.Totals(60), (std::vector<double>{6, 3, 0}));
  EXPECT_EQ(w.Totals(120), (std::vector<double>{0, 3, 0}));
  EXPECT_DOUBLE_EQ(w.Fairness(120), 1.0 / 3.0);
}

TEST(FailureRateTest, Counters) {
  EXPECT_DOUBLE_EQ(OffloadingFailureRate({.successes = 5}, 0.4).value, 0.0);
  EXPECT_DOUBLE_EQ(OffloadingFailureRate({.final_losses = 3}, 0.4).value, 1.0);
  auto stale = OffloadingFailureRate({}, 0.4);
  EXPECT_TRUE(stale.stale);
  EXPECT_DOUBLE_EQ(stale.value, 0.4);
}

TEST(BudgetTest, ConservationWithoutReset) {
  BidderAccount a;
  const double start = a.budget;
  double sum = 0;
  for (double u : {0.5, -1.25, 2.0, -0.75}) {
    EXPECT_FALSE(UpdateBudget(a, u));
    sum += u;
  }
  EXPECT_DOUBLE_EQ(a.budget - start, sum);
}

TEST(BudgetTest, ResetCountsAndRestores) {
  BidderAccount a;
  a.budget = 5;
  EXPECT_TRUE(UpdateBudget(a, -7));
  EXPECT_DOUBLE_EQ(a.budget, a.initial_wealth);
  EXPECT_EQ(a.resets, 1);
}

TEST(PreferenceTest, SimplexHoldsForManyDraws) {
  auto r = oracles::CheckPreferenceSimplex(10000, 3);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(PreferenceTest, PairsFromDraws) {
  auto w = PreferenceVector::FromDraws(0.5, 0.25, 1.0);
  EXPECT_DOUBLE_EQ(w.utility, w.utilization);
  EXPECT_DOUBLE_EQ(w.failure, 0.25);
  EXPECT_DOUBLE_EQ(w.fairness, 0.75);
  EXPECT_DOUBLE_EQ(w.backoff_cost, 0.0);
}

TEST(PreferenceTest, MeanOfUtilityWeight) {
  sim::Rng rng(8);
  double sum = 0;
  const int n = 50000;
  for (int i = 0; i < n; ++i) sum += SamplePreferences(rng).utility;
  EXPECT_NEAR(sum / n, 0.5, 0.01);
}

TEST(PreferenceTest, ScheduleResamplesAtGeometricEpochs) {
  PreferenceSchedule s(sim::Rng(2), 100.0);
  int changes = 0;
  for (sim::Step t = 1; t <= 100000; ++t) changes += s.Advance(t);
  EXPECT_NEAR(changes, 1000, 120);
  PreferenceSchedule fixed(sim::Rng(2), 0.0);
  const auto w = fixed.current();
  for (sim::Step t = 1; t <= 1000; ++t) EXPECT_FALSE(fixed.Advance(t));
  EXPECT_EQ(fixed.current().utility, w.utility);
}

TEST(ValuationTest, WithinInitialWealth) {
  sim::Rng rng(4);
  const auto types = market::DefaultCommodityTypes();
  for (int i = 0; i < 1000; ++i) {
    auto v = DrawValuations(types, ValuationConfig{}, 10.0, rng);
    ASSERT_EQ(v.size(), types.size());
    for (double x : v) {
      EXPECT_GT(x, 0.0);
      EXPECT_LE(x, 10.0);
    }
  }
  EXPECT_DOUBLE_EQ(LossCost(3.0), 3.0);
  EXPECT_DOUBLE_EQ(BackoffCost(3.0, 6, 1.0), 0.5);
  EXPECT_DOUBLE_EQ(BackoffCost(3.0, 0, 1.0), 3.0);
}

}  // namespace
}  // namespace edgemarket::rewards
