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

#include <array>
#include <vector>

#include "edgemarket/agent/bidder.h"
#include "edgemarket/baselines/factory.h"
#include "edgemarket/scenarios/config.h"
#include "edgemarket/scenarios/experiments.h"
#include "gtest/gtest.h"

namespace edgemarket::baselines {
namespace {

TEST(BidderKindTest, ParseAndName) {
  for (const char* name : {"moody", "ac", "draco2-like", "random"}) {
    EXPECT_EQ(BidderKindName(ParseBidderKind(name)), name);
  }
  EXPECT_THROW(ParseBidderKind("draco"), scenarios::ConfigError);
  EXPECT_THROW(ParseBidderKind(""), scenarios::ConfigError);
}

TEST(BidderKindTest, Traits) {
  EXPECT_TRUE(IsLearner(BidderKind::kMoody));
  EXPECT_TRUE(IsLearner(BidderKind::kActorCritic));
  EXPECT_TRUE(IsLearner(BidderKind::kDraco2Like));
  EXPECT_FALSE(IsLearner(BidderKind::kRandom));
  EXPECT_TRUE(UsesConstantPreference(BidderKind::kDraco2Like));
  EXPECT_FALSE(UsesConstantPreference(BidderKind::kMoody));
}

TEST(AgentConfigTest, DeploymentPolicies) {
  const scenarios::ScenarioConfig c = scenarios::TestPreset();
  const auto moody = MakeAgentConfig(BidderKind::kMoody, c, Phase::kDeployment);
  EXPECT_EQ(moody.retrain, agent::RetrainPolicy::kAdaptive);
  EXPECT_TRUE(moody.modules.curiosity);
  EXPECT_TRUE(moody.modules.credit);
  EXPECT_TRUE(moody.modules.fsp);

  const auto ac = MakeAgentConfig(BidderKind::kActorCritic, c,
                                  Phase::kDeployment);
  EXPECT_EQ(ac.retrain, agent::RetrainPolicy::kNever);
  EXPECT_FALSE(ac.modules.curiosity);
  EXPECT_FALSE(ac.modules.credit);
  EXPECT_TRUE(ac.modules.fsp);

  const auto draco = MakeAgentConfig(BidderKind::kDraco2Like, c,
                                     Phase::kDeployment);
  EXPECT_EQ(draco.retrain, agent::RetrainPolicy::kFirstSteps);
  EXPECT_EQ(draco.retrain_until, c.draco_retrain_steps);
  EXPECT_EQ(draco.algo, "draco2-like");
}

TEST(AgentConfigTest, TrainingRetrainsEveryWindow) {
  const scenarios::ScenarioConfig c = scenarios::TrainPreset();
  for (BidderKind k : {BidderKind::kMoody, BidderKind::kActorCritic,
                       BidderKind::kDraco2Like}) {
    const auto a = MakeAgentConfig(k, c, Phase::kOfflineTraining, 123);
    EXPECT_EQ(a.retrain, agent::RetrainPolicy::kEveryWindow);
    EXPECT_EQ(a.fsp_offset, 123);
    EXPECT_EQ(a.window, c.window);
  }
  EXPECT_THROW(MakeAgentConfig(BidderKind::kRandom, c, Phase::kDeployment),
               std::invalid_argument);
}

agent::Observation OneBid(double valuation) {
  agent::Observation obs;
  obs.previous_wealth = 100.0;
  obs.pipeline.push_back(agent::PipelineBid{.deadline = 100,
                                            .valuation = valuation});
  return obs;
}

TEST(RandomBidderTest, UniformCoinAndLevel) {
  RandomBidder bidder(5, sim::Rng(3));
  constexpr int kDraws = 20000;
  int bids = 0;
  std::array<int, 5> levels{};
  for (int i = 0; i < kDraws; ++i) {
    agent::Observation obs = OneBid(1.0);
    const agent::Decision d = bidder.Act(obs);
    ASSERT_EQ(d.actions.size(), 1u);
    if (!d.actions[0].bid) {
      EXPECT_EQ(d.prices[0], 0.0);
      continue;
    }
    ++bids;
    ++levels[d.actions[0].level];
    EXPECT_DOUBLE_EQ(d.prices[0], d.actions[0].level / 4.0);
  }
  // Binomial(20000, 1/2) has sd ~71; allow five of them.
  EXPECT_NEAR(bids, kDraws / 2, 360);
  for (int n : levels) EXPECT_NEAR(n, bids / 5, 250);
}

TEST(RandomBidderTest, RespectsBudget) {
  RandomBidder bidder(3, sim::Rng(4));
  for (int i = 0; i < 1000; ++i) {
    agent::Observation obs = OneBid(2.0);
    obs.pipeline.push_back(obs.pipeline[0]);
    obs.previous_wealth = 1.5;
    const agent::Decision d = bidder.Act(obs);
    EXPECT_LE(d.prices[0] + d.prices[1], 1.5);
  }
}

TEST(RandomBidderTest, NeverRetrains) {
  scenarios::ScenarioConfig c = scenarios::TestPreset();
  c.population = {{"random", 3}};
  c.horizon = 10000;
  const scenarios::RunResult r = scenarios::RunScenario(c, 1, {});
  EXPECT_EQ(r.algos, (std::vector<std::string>{"random", "random", "random"}));
  for (const auto& row : r.rows) {
    if (row.metric == "retrain") {
      EXPECT_EQ(row.value, 0.0);
    }
  }
}

TEST(PopulationTest, LearnerWithoutModelIsAnError) {
  scenarios::ScenarioConfig c = scenarios::TestPreset();
  c.population = {{"moody", 2}};
  c.horizon = 100;
  EXPECT_THROW(scenarios::RunScenario(c, 1, {}), scenarios::ConfigError);
}

TEST(PopulationTest, MixCounts) {
  const auto p = scenarios::MixPopulation("moody", 2, "draco2-like", 6);
  int moody = 0, draco = 0;
  for (const auto& g : p) {
    (g.algo == "moody" ? moody : draco) += g.count;
  }
  EXPECT_EQ(moody, 2);
  EXPECT_EQ(draco, 4);
}

}  // namespace
}  // namespace edgemarket::baselines
