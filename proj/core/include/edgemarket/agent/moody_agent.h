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

#ifndef EDGEMARKET_AGENT_MOODY_AGENT_H_
#define EDGEMARKET_AGENT_MOODY_AGENT_H_

#include <memory>
#include <string>
#include <vector>

#include "edgemarket/agent/bidder.h"
#include "edgemarket/agent/fsp.h"
#include "edgemarket/agent/memory.h"
#include "edgemarket/agent/retrain_monitor.h"
#include "edgemarket/agent/state.h"
#include "edgemarket/nn/model.h"
#include "edgemarket/simcore/rng.h"

namespace edgemarket::agent {

struct ModuleSwitches {
  bool curiosity = true;
  bool credit = true;
  bool fsp = true;
};

// When the end of a window runs a training shot.
enum class RetrainPolicy {
  kEveryWindow,  // offline training
  kAdaptive,     // credit prediction loss above its recent average
  kFirstSteps,   // every window until `retrain_until`
  kNever,
};

struct LearningConfig {
  double gamma = 0.99;
  double actor_rate = 0.01;
  double critic_weight = 0.5;
  double supervised_rate = 0.01;
  double curiosity_rate = 0.01;
  double credit_rate = 0.01;
};

struct AgentConfig {
  std::string algo = "moody";
  ModuleSwitches modules;
  RetrainPolicy retrain = RetrainPolicy::kEveryWindow;
  sim::Step retrain_until = 10000;
  int monitor_size = 10;
  int retrain_shots = 1;
  FspSchedule fsp;
  // Added to the step count fed to the FSP schedule, so deployed agents
  // continue the schedule where training left it.
  sim::Step fsp_offset = 0;
  LearningConfig learning;
  StateConfig state;
  sim::Step window = 2000;
  std::size_t memory_capacity = 8192;
};

// Gradients of one shot, one per module, each the mean of that shot's
// per-transition ascent directions.
struct ShotGradient {
  int shot = 0;
  std::vector<nn::Gradient> modules;
};

class MoodyAgent : public Bidder {
 public:
  MoodyAgent(AgentConfig config, std::shared_ptr<const nn::Networks> nets,
             nn::ModelBundle init, sim::Rng exploration);

  std::string_view algo() const override { return config_.algo; }
  void SetPreference(const rewards::PreferenceVector& w) override {
    preference_ = w;
  }
  Decision Act(const Observation& obs) override;
  void Feedback(sim::Step now, double extrinsic_reward) override;
  void EndWindow(sim::Step now, double long_term_reward) override;
  const BidderStats& stats() const override { return stats_; }

  const AgentConfig& config() const { return config_; }
  const nn::ModelBundle& model() const { return model_; }
  const rewards::PreferenceVector& preference() const { return preference_; }
  const AgentMemory& memory() const { return memory_; }
  int shots_trained() const { return shots_trained_; }
  // Gradient of the most recent trained shot; empty before the first.
  const ShotGradient& last_shot_gradient() const { return last_gradient_; }

  // Replaces the parameters, e.g. with a refreshed generic model.
  void LoadModel(const nn::ModelBundle& model);

  // Trains one shot on the complete entries in memory. Returns the number of
  // transitions used. Exposed for tests; EndWindow calls it.
  long TrainShot();

 private:
  double Eta(sim::Step now) const;
  void CompletePending(const std::vector<double>& state,
                       const std::vector<double>& stacked);

  AgentConfig config_;
  std::shared_ptr<const nn::Networks> nets_;
  nn::ModelBundle model_;
  sim::Rng rng_;
  rewards::PreferenceVector preference_;
  FrameStack stack_;
  AgentMemory memory_;
  RetrainMonitor monitor_;
  BidderStats stats_;
  ShotGradient last_gradient_;
  int shots_trained_ = 0;
};

// One action per pipeline bid drawn from a policy pass.
std::vector<nn::BidAction> SampleActions(const nn::PolicyNetwork::Pass& pass,
                                         sim::Rng& rng);

}  // namespace edgemarket::agent

#endif  // EDGEMARKET_AGENT_MOODY_AGENT_H_
