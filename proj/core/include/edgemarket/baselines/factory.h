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

#ifndef EDGEMARKET_BASELINES_FACTORY_H_
#define EDGEMARKET_BASELINES_FACTORY_H_

#include <memory>
#include <string>
#include <string_view>

#include "edgemarket/agent/bidder.h"
#include "edgemarket/agent/moody_agent.h"
#include "edgemarket/nn/model.h"
#include "edgemarket/scenarios/config.h"
#include "edgemarket/simcore/rng.h"

namespace edgemarket::baselines {

enum class BidderKind { kMoody, kActorCritic, kDraco2Like, kRandom };

// "moody", "ac", "draco2-like", "random". Throws scenarios::ConfigError on
// anything else.
BidderKind ParseBidderKind(std::string_view name);
std::string_view BidderKindName(BidderKind kind);

bool IsLearner(BidderKind kind);
// DRACO2-like bidders optimise one fixed scalarisation for the whole run.
bool UsesConstantPreference(BidderKind kind);

enum class Phase { kOfflineTraining, kDeployment };

// Agent settings for a learning kind:
//   moody        all modules, adaptive retraining when deployed
//   ac           actor-critic with FSP only, never retrained when deployed
//   draco2-like  all modules, retrained every window for the first
//                `draco_retrain_steps` steps of deployment
agent::AgentConfig MakeAgentConfig(BidderKind kind,
                                   const scenarios::ScenarioConfig& config,
                                   Phase phase, sim::Step fsp_offset = 0);

struct BidderContext {
  const scenarios::ScenarioConfig* config = nullptr;
  Phase phase = Phase::kDeployment;
  std::shared_ptr<const nn::Networks> nets;  // learners only
  const nn::ModelBundle* model = nullptr;    // learners only
  sim::Step fsp_offset = 0;
};

std::unique_ptr<agent::Bidder> MakeBidder(BidderKind kind,
                                          const BidderContext& ctx,
                                          sim::Rng exploration);

// Uniform backoff coin and uniform price level; the budget mask still
// applies.
class RandomBidder : public agent::Bidder {
 public:
  RandomBidder(int price_levels, sim::Rng rng)
      : levels_(price_levels), rng_(rng) {}

  std::string_view algo() const override { return "random"; }
  void SetPreference(const rewards::PreferenceVector&) override {}
  agent::Decision Act(const agent::Observation& obs) override;
  void Feedback(sim::Step, double) override {}
  void EndWindow(sim::Step, double) override { ++stats_.windows; }
  const agent::BidderStats& stats() const override { return stats_; }

 private:
  int levels_;
  sim::Rng rng_;
  agent::BidderStats stats_;
};

}  // namespace edgemarket::baselines

#endif  // EDGEMARKET_BASELINES_FACTORY_H_
