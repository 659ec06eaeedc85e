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

#ifndef EDGEMARKET_META_TRAINING_H_
#define EDGEMARKET_META_TRAINING_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "edgemarket/baselines/factory.h"
#include "edgemarket/nn/model.h"
#include "edgemarket/scenarios/config.h"
#include "edgemarket/simcore/clock.h"

namespace edgemarket::meta {

// One inner-loop shot of one agent.
struct TrainingRow {
  int epoch = 0;
  int agent = 0;
  int shot = 0;
  double rl_reward = 0.0;
  std::optional<double> credit_loss;
  std::optional<double> forward_loss;
  std::optional<double> inverse_loss;
};

struct TrainingResult {
  nn::ModelBundle model;
  std::vector<TrainingRow> rows;
  bool halted = false;
  std::string diagnostic;
  int epochs_completed = 0;
  sim::Step trained_steps = 0;
  long meta_updates = 0;
};

// Offline training on the scenario in `config`.
//
// moody / ac: each epoch broadcasts the generic model to every bidder, runs
// `training.tau` windows with fresh constant preferences, and submits each
// agent's last shot gradient to the coordinator in bidder order.
//
// draco2-like: no outer loop; the agents train continuously for the same
// number of steps and agent 0's parameters are returned.
TrainingResult RunOfflineTraining(const scenarios::ScenarioConfig& config,
                                  std::uint64_t seed, baselines::BidderKind kind);

// epoch,agent,shot,rl_reward,credit_loss,forward_loss,inverse_loss; absent
// losses are left empty.
void WriteTrainingCsv(const std::vector<TrainingRow>& rows,
                      const std::string& path);

// Metadata stored next to a trained model.
std::map<std::string, std::string> CheckpointMetadata(
    const TrainingResult& result, baselines::BidderKind kind,
    std::uint64_t seed);

}  // namespace edgemarket::meta

#endif  // EDGEMARKET_META_TRAINING_H_
