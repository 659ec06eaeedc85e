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

#ifndef EDGEMARKET_SCENARIOS_CONFIG_H_
#define EDGEMARKET_SCENARIOS_CONFIG_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgemarket/agent/moody_agent.h"
#include "edgemarket/market/seller.h"
#include "edgemarket/market/types.h"
#include "edgemarket/nn/architecture.h"
#include "edgemarket/rewards/preference.h"
#include "edgemarket/rewards/valuation.h"
#include "edgemarket/simcore/mobility.h"
#include "edgemarket/simcore/transmission.h"

namespace edgemarket::scenarios {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PopulationGroup {
  std::string algo;  // moody | ac | draco2-like | random
  int count = 0;
};

struct SiteConfig {
  double capacity = 5.0;
  sim::Step link_delay = 0;
  double base_price = 1.0;
};

struct TrainingConfig {
  int epochs = 100;
  int tau = 3;
  double meta_rate = 0.1;
  // Any logged loss above this halts training.
  double loss_ceiling = 1e6;
};

struct ScenarioConfig {
  std::string preset = "test";
  sim::Step horizon = 100000;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  std::vector<market::CommodityType> types = market::DefaultCommodityTypes();
  std::vector<SiteConfig> sites;
  double slot_rate = 5.0;
  // Processing-time jitter: actual work = nominal * U[1, 1 + jitter].
  double work_jitter = 0.2;
  std::vector<PopulationGroup> population{{"moody", 6}};
  sim::MobilityConfig mobility = sim::TestMobility();
  // Vehicles already on the road when the first step runs.
  double mobility_warmup_s = 120.0;
  sim::RadioConfig radio;
  double preference_resample_mean = 5000.0;
  // When set, every bidder keeps this vector for the whole run.
  std::optional<rewards::PreferenceVector> fixed_preference;
  sim::Step window = 2000;
  // Broadcasts produced at step s reach bidders at s + 1 + feedback_delay.
  sim::Step feedback_delay = 0;
  int max_rebids = 1;
  double initial_wealth = 10.0;
  rewards::ValuationConfig valuation;
  nn::Architecture architecture;
  agent::LearningConfig learning;
  agent::FspSchedule fsp;
  int monitor_size = 10;
  int retrain_shots = 1;
  sim::Step draco_retrain_steps = 10000;
  TrainingConfig training;
  std::string output_dir = "out";

  int num_bidders() const;
  double total_capacity() const;
};

// Training column of the presets: high capacity, steady traffic.
ScenarioConfig TrainPreset();
// Test column: scarce capacity, bursty traffic.
ScenarioConfig TestPreset();

// Starts from the preset named in the file (default "test") and overrides
// every key present. Unknown keys and bad values raise ConfigError.
ScenarioConfig LoadConfig(const std::string& path);
ScenarioConfig ParseConfig(const std::string& json_text);
std::string ConfigToJson(const ScenarioConfig& cfg);

void ValidateConfig(const ScenarioConfig& cfg);

// Parses "A..B" or "A,B,C" or "A".
std::vector<std::uint64_t> ParseSeedList(const std::string& text);

}  // namespace edgemarket::scenarios

#endif  // EDGEMARKET_SCENARIOS_CONFIG_H_
