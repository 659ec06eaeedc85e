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

#include "edgemarket/baselines/factory.h"

#include <stdexcept>

namespace edgemarket::baselines {

BidderKind ParseBidderKind(std::string_view name) {
  if (name == "moody") return BidderKind::kMoody;
  if (name == "ac") return BidderKind::kActorCritic;
  if (name == "draco2-like") return BidderKind::kDraco2Like;
  if (name == "random") return BidderKind::kRandom;
  throw scenarios::ConfigError("unknown algorithm kind '" + std::string(name) +
                               "'");
}

std::string_view BidderKindName(BidderKind kind) {
  switch (kind) {
    case BidderKind::kMoody:
      return "moody";
    case BidderKind::kActorCritic:
      return "ac";
    case BidderKind::kDraco2Like:
      return "draco2-like";
    case BidderKind::kRandom:
      return "random";
  }
  return "unknown";
}

bool IsLearner(BidderKind kind) { return kind != BidderKind::kRandom; }

bool UsesConstantPreference(BidderKind kind) {
  return kind == BidderKind::kDraco2Like;
}

agent::AgentConfig MakeAgentConfig(BidderKind kind,
                                   const scenarios::ScenarioConfig& config,
                                   Phase phase, sim::Step fsp_offset) {
  if (!IsLearner(kind)) {
    throw std::invalid_argument("random bidders have no agent config");
  }
  agent::AgentConfig a;
  a.algo = std::string(BidderKindName(kind));
  a.learning = config.learning;
  a.fsp = config.fsp;
  a.fsp_offset = fsp_offset;
  a.monitor_size = config.monitor_size;
  a.retrain_shots = config.retrain_shots;
  a.state = agent::StateConfig::ForTypes(config.types, config.initial_wealth);
  a.window = config.window;
  a.retrain_until = config.draco_retrain_steps;
  if (kind == BidderKind::kActorCritic) {
    a.modules.curiosity = false;
    a.modules.credit = false;
  }
  if (phase == Phase::kOfflineTraining) {
    a.retrain = agent::RetrainPolicy::kEveryWindow;
    return a;
  }
  switch (kind) {
    case BidderKind::kMoody:
      a.retrain = agent::RetrainPolicy::kAdaptive;
      break;
    case BidderKind::kActorCritic:
      a.retrain = agent::RetrainPolicy::kNever;
      break;
    case BidderKind::kDraco2Like:
      a.retrain = agent::RetrainPolicy::kFirstSteps;
      break;
    case BidderKind::kRandom:
      break;
  }
  return a;
}

std::unique_ptr<agent::Bidder> MakeBidder(BidderKind kind,
                                          const BidderContext& ctx,
                                          sim::Rng exploration) {
  if (ctx.config == nullptr) throw std::invalid_argument("missing config");
  if (kind == BidderKind::kRandom) {
    return std::make_unique<RandomBidder>(ctx.config->architecture.price_levels,
                                          exploration);
  }
  if (ctx.nets == nullptr || ctx.model == nullptr) {
    throw std::invalid_argument("learning bidders need networks and a model");
  }
  return std::make_unique<agent::MoodyAgent>(
      MakeAgentConfig(kind, *ctx.config, ctx.phase, ctx.fsp_offset), ctx.nets,
      *ctx.model, exploration);
}

agent::Decision RandomBidder::Act(const agent::Observation& obs) {
  std::vector<nn::BidAction> actions;
  actions.reserve(obs.pipeline.size());
  for (std::size_t j = 0; j < obs.pipeline.size(); ++j) {
    nn::BidAction a;
    a.bid = rng_.Bernoulli(0.5);
    const int level =
        static_cast<int>(rng_.UniformInt(static_cast<std::uint64_t>(levels_)));
    a.level = a.bid ? level : 0;
    actions.push_back(a);
  }
  ++stats_.decisions;
  return agent::ApplyBudgetMask(std::move(actions), obs.pipeline, levels_,
                                obs.previous_wealth);
}

}  // namespace edgemarket::baselines
