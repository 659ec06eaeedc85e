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

#include <cmath>
#include <memory>
#include <numeric>
#include <vector>

#include "edgemarket/agent/bidder.h"
#include "edgemarket/agent/memory.h"
#include "edgemarket/agent/moody_agent.h"
#include "edgemarket/agent/retrain_monitor.h"
#include "edgemarket/agent/state.h"
#include "edgemarket/nn/model.h"
#include "edgemarket/oracles/trigger_oracle.h"
#include "gtest/gtest.h"

namespace edgemarket::agent {
namespace {

std::vector<bool> RunMonitor(std::span<const double> losses) {
  RetrainMonitor m(10, 1);
  std::vector<bool> out;
  for (double l : losses) out.push_back(m.Check(l));
  return out;
}

TEST(RetrainMonitorTest, SpikeAboveAverageTriggers) {
  RetrainMonitor m(10, 1);
  for (int i = 0; i < 10; ++i) m.Check(1.0);
  EXPECT_DOUBLE_EQ(m.Average(), 1.0);
  EXPECT_TRUE(m.Check(2.0));
}

TEST(RetrainMonitorTest, DropBelowAverageDoesNotTrigger) {
  RetrainMonitor m(10, 1);
  for (int i = 0; i < 10; ++i) m.Check(1.0);
  EXPECT_FALSE(m.Check(0.5));
}

TEST(RetrainMonitorTest, EqualToAverageDoesNotTrigger) {
  RetrainMonitor m(10, 1);
  for (int i = 0; i < 10; ++i) m.Check(1.0);
  EXPECT_FALSE(m.Check(1.0));
}

TEST(RetrainMonitorTest, ColdStartTriggersOnce) {
  std::vector<double> improving;
  for (int i = 0; i < 15; ++i) improving.push_back(10.0 - i);
  const std::vector<bool> got = RunMonitor(improving);
  EXPECT_TRUE(got[0]);
  for (std::size_t i = 1; i < got.size(); ++i) EXPECT_FALSE(got[i]) << i;
}

TEST(RetrainMonitorTest, KeepsOnlyLastN) {
  RetrainMonitor m(3, 1);
  for (double l : {100.0, 1.0, 1.0, 1.0}) m.Check(l);
  EXPECT_EQ(m.size(), 3u);
  EXPECT_DOUBLE_EQ(m.Average(), 1.0);
}

TEST(RetrainMonitorTest, MatchesReference) {
  const oracles::CheckResult r = oracles::CheckRetrainTriggers();
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(RetrainMonitorTest, OracleCatchesStrictAverageBug) {
  // A monitor that never forgets history disagrees with the sliding window.
  const oracles::CheckResult r =
      oracles::CheckRetrainTriggers([](std::span<const double> losses) {
        std::vector<bool> out;
        double sum = 0.0;
        for (std::size_t i = 0; i < losses.size(); ++i) {
          out.push_back(i == 0 || losses[i] > sum / i);
          sum += losses[i];
        }
        return out;
      });
  EXPECT_FALSE(r.passed);
}

TEST(BudgetMaskTest, BacksOffBidsPastBudget) {
  std::vector<PipelineBid> pipeline(3);
  for (auto& b : pipeline) b.valuation = 1.0;
  std::vector<nn::BidAction> actions(3, nn::BidAction{.bid = true, .level = 10});
  const Decision d = ApplyBudgetMask(actions, pipeline, 11, 2.5);
  EXPECT_EQ(d.prices, (std::vector<double>{1.0, 1.0, 0.0}));
  EXPECT_TRUE(d.actions[1].bid);
  EXPECT_FALSE(d.actions[2].bid);
}

TEST(BudgetMaskTest, NoBudgetNoBids) {
  std::vector<PipelineBid> pipeline(1);
  pipeline[0].valuation = 1.0;
  const Decision d = ApplyBudgetMask({nn::BidAction{.bid = true, .level = 0}},
                                     pipeline, 11, 0.0);
  EXPECT_FALSE(d.actions[0].bid);
}

TEST(BudgetMaskTest, GridPrice) {
  EXPECT_DOUBLE_EQ(GridPrice(0, 11, 2.0), 0.0);
  EXPECT_DOUBLE_EQ(GridPrice(5, 11, 2.0), 1.0);
  EXPECT_DOUBLE_EQ(GridPrice(10, 11, 2.0), 2.0);
}

TEST(StateTest, LayoutAndWealthSquash) {
  StateConfig cfg;
  Observation obs;
  obs.now = 100;
  obs.pipeline.push_back(PipelineBid{.type = 1, .deadline = 350,
                                     .resource_units = 40});
  obs.market.vehicle_count = 15;
  obs.market.utilization = 0.25;
  obs.market.clearing_prices = {0.5, 0.0};
  obs.previous_wealth = cfg.initial_wealth;
  obs.previous_reward = -0.3;
  const std::vector<double> s = BuildState(obs, cfg);
  ASSERT_EQ(s.size(), 11u);
  EXPECT_DOUBLE_EQ(s[0], 0.0);
  EXPECT_DOUBLE_EQ(s[1], 1.0);
  EXPECT_DOUBLE_EQ(s[2], 1.0 / cfg.pipeline_norm);
  EXPECT_DOUBLE_EQ(s[3], 250.0 / 500.0);
  EXPECT_DOUBLE_EQ(s[4], 40.0 / cfg.resource_norm);
  EXPECT_DOUBLE_EQ(s[5], 0.5);
  EXPECT_DOUBLE_EQ(s[6], 0.25);
  EXPECT_DOUBLE_EQ(s[7], 0.5);
  EXPECT_DOUBLE_EQ(s[8], 0.5);
  EXPECT_DOUBLE_EQ(s[10], -0.3);
}

TEST(StateTest, MostUrgentPrefersFirstOnTies) {
  std::vector<PipelineBid> p(3);
  p[0].deadline = 50;
  p[1].deadline = 20;
  p[2].deadline = 20;
  EXPECT_EQ(MostUrgent(p), 1u);
}

TEST(FrameStackTest, NewestFirstZeroPadded) {
  FrameStack stack(3, 2);
  stack.Push({1, 2});
  EXPECT_EQ(stack.Stacked(), (std::vector<double>{1, 2, 0, 0, 0, 0}));
  stack.Push({3, 4});
  stack.Push({5, 6});
  stack.Push({7, 8});
  EXPECT_EQ(stack.size(), 3);
  EXPECT_EQ(stack.Stacked(), (std::vector<double>{7, 8, 5, 6, 3, 4}));
}

TEST(MemoryTest, EvictsOldestAndKeepsPending) {
  AgentMemory memory(2);
  for (int i = 0; i < 3; ++i) {
    MemoryEntry e;
    e.step = i;
    e.complete = i < 2;
    memory.Push(e);
  }
  EXPECT_EQ(memory.size(), 2u);
  EXPECT_EQ(memory.evicted(), 1u);
  ASSERT_NE(memory.Pending(), nullptr);
  EXPECT_EQ(memory.Pending()->step, 2);
  memory.DropAllButPending();
  ASSERT_EQ(memory.size(), 1u);
  EXPECT_EQ(memory.entries().front().step, 2);
}

TEST(MemoryTest, EntryWeightsSplitSegmentsAndAverageOne) {
  std::vector<MemoryEntry> store(3);
  store[0].step = 0;
  store[1].step = 10;
  store[2].step = 30;
  std::vector<MemoryEntry*> entries{&store[0], &store[1], &store[2]};
  // Window of 100 in four segments: entries fall into segments 0, 0, 1.
  const std::vector<double> attention{0.2, 0.2, 0.3, 0.3};
  const std::vector<double> w = EntryWeights(entries, attention, 0, 100);
  ASSERT_EQ(w.size(), 3u);
  EXPECT_NEAR(w[0], 0.75, 1e-12);
  EXPECT_NEAR(w[1], 0.75, 1e-12);
  EXPECT_NEAR(w[2], 1.5, 1e-12);
  EXPECT_NEAR(std::accumulate(w.begin(), w.end(), 0.0), 3.0, 1e-12);
}

TEST(MemoryTest, RetroLabelSharesLongTermReward) {
  std::vector<MemoryEntry> store(2);
  store[0].extrinsic = 1.0;
  store[0].forward_loss = 0.1;
  store[0].complete = true;
  store[1].extrinsic = -1.0;
  std::vector<MemoryEntry*> entries{&store[0], &store[1]};
  RetroLabel(entries, std::vector<double>{2.0, 0.5}, 4.0);
  EXPECT_DOUBLE_EQ(store[0].extrinsic, 3.0);
  EXPECT_DOUBLE_EQ(store[1].extrinsic, 1.0);
  EXPECT_DOUBLE_EQ(store[0].epsilon, 2.0);
  EXPECT_DOUBLE_EQ(store[0].intrinsic, 2.0 * 3.0 + 0.1);
  EXPECT_TRUE(store[0].labeled);
}

// Single-type bandit: bidding earns +0.5, backing off -0.5.
class AgentHarness {
 public:
  explicit AgentHarness(AgentConfig cfg) {
    nn::Architecture arch;
    arch.stack_depth = 2;
    arch.hidden = 8;
    arch.price_levels = 3;
    arch.curiosity_hidden = 6;
    arch.credit_hidden = 4;
    arch.credit_attention = 4;
    arch.credit_segments = 5;
    nets_ = std::make_shared<const nn::Networks>(arch);
    sim::Rng init(7);
    cfg.window = kWindow;
    agent_ = std::make_unique<MoodyAgent>(cfg, nets_,
                                          nn::InitModel(*nets_, init),
                                          sim::Rng(11));
    agent_->SetPreference(rewards::PreferenceVector{});
  }

  // Runs `windows` windows of 50 decisions. Returns the fraction of bids in
  // the last window.
  double Run(int windows) {
    long bids = 0, decisions = 0;
    for (int w = 0; w < windows; ++w) {
      bids = decisions = 0;
      for (sim::Step t = 0; t < kWindow; t += 4) {
        const sim::Step now = now_ + t;
        Observation obs;
        obs.now = now;
        obs.previous_wealth = 10.0;
        obs.pipeline.push_back(PipelineBid{.request = now, .created = now,
                                           .deadline = now + 100,
                                           .resource_units = 40,
                                           .valuation = 0.5});
        obs.market.produced_at = now - 1;
        obs.market.clearing_prices = {0.0, 0.0};
        const Decision d = agent_->Act(obs);
        ++decisions;
        bids += d.actions[0].bid;
        agent_->Feedback(now, d.actions[0].bid ? 0.5 : -0.5);
      }
      now_ += kWindow;
      agent_->EndWindow(now_ - 1, 0.0);
    }
    return static_cast<double>(bids) / decisions;
  }

  MoodyAgent& agent() { return *agent_; }

 private:
  static constexpr sim::Step kWindow = 200;
  std::shared_ptr<const nn::Networks> nets_;
  std::unique_ptr<MoodyAgent> agent_;
  sim::Step now_ = 0;
};

AgentConfig BanditConfig(RetrainPolicy policy) {
  AgentConfig cfg;
  cfg.modules = ModuleSwitches{.curiosity = false, .credit = false,
                               .fsp = false};
  cfg.retrain = policy;
  cfg.learning.gamma = 0.0;
  cfg.learning.actor_rate = 0.05;
  return cfg;
}

TEST(MoodyAgentTest, LearnsToBidInBandit) {
  AgentHarness h(BanditConfig(RetrainPolicy::kEveryWindow));
  const double before = h.Run(1);
  const double after = h.Run(60);
  EXPECT_GT(after, before);
  EXPECT_GT(after, 0.9);
  EXPECT_EQ(h.agent().shots_trained(), 61);
  EXPECT_EQ(h.agent().stats().retrain_shots, 0);
}

TEST(MoodyAgentTest, NeverPolicyLeavesModelUntouched) {
  AgentHarness h(BanditConfig(RetrainPolicy::kNever));
  const nn::ModelBundle before = h.agent().model();
  h.Run(5);
  EXPECT_TRUE(nn::BundlesEqual(before, h.agent().model()));
  EXPECT_EQ(h.agent().shots_trained(), 0);
  EXPECT_EQ(h.agent().stats().windows, 5);
}

TEST(MoodyAgentTest, FirstStepsPolicyStopsAtCutoff) {
  AgentConfig cfg = BanditConfig(RetrainPolicy::kFirstSteps);
  cfg.retrain_until = 600;
  AgentHarness h(cfg);
  h.Run(6);
  // Windows end at 199, 399, 599, 799, ...
  EXPECT_EQ(h.agent().stats().retrain_shots, 3);
}

TEST(MoodyAgentTest, AdaptivePolicyTriggersOnColdStart) {
  AgentConfig cfg = BanditConfig(RetrainPolicy::kAdaptive);
  cfg.modules = ModuleSwitches{};
  AgentHarness h(cfg);
  h.Run(1);
  EXPECT_EQ(h.agent().stats().retrain_shots, 1);
  ASSERT_EQ(h.agent().stats().shots.size(), 1u);
  EXPECT_TRUE(h.agent().stats().shots[0].credit_loss.has_value());
  EXPECT_TRUE(h.agent().stats().shots[0].forward_loss.has_value());
}

TEST(MoodyAgentTest, ShotGradientHasOneBlockPerModule) {
  AgentConfig cfg = BanditConfig(RetrainPolicy::kEveryWindow);
  cfg.modules = ModuleSwitches{};
  AgentHarness h(cfg);
  h.Run(2);
  const ShotGradient& g = h.agent().last_shot_gradient();
  EXPECT_EQ(g.shot, 2);
  ASSERT_EQ(g.modules.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(g.modules[i].size(), h.agent().model().Get(nn::kAllModules[i]).size());
    EXPECT_TRUE(g.modules[i].IsFinite());
  }
}

TEST(MoodyAgentTest, DeterministicForFixedSeeds) {
  AgentConfig cfg = BanditConfig(RetrainPolicy::kEveryWindow);
  cfg.modules = ModuleSwitches{};
  AgentHarness a(cfg), b(cfg);
  EXPECT_EQ(a.Run(3), b.Run(3));
  EXPECT_TRUE(nn::BundlesEqual(a.agent().model(), b.agent().model()));
}

}  // namespace
}  // namespace edgemarket::agent
