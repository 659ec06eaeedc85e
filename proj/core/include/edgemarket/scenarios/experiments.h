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

#ifndef EDGEMARKET_SCENARIOS_EXPERIMENTS_H_
#define EDGEMARKET_SCENARIOS_EXPERIMENTS_H_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "edgemarket/nn/model.h"
#include "edgemarket/scenarios/config.h"
#include "edgemarket/scenarios/metrics.h"
#include "edgemarket/scenarios/simulation.h"

namespace edgemarket::scenarios {

// Initial parameters for one learning kind.
struct TrainedModel {
  nn::ModelBundle model;
  // Steps of offline training behind the model; deployed agents continue
  // the FSP schedule from here.
  sim::Step trained_steps = 0;
};

// Keyed by algorithm name.
using ModelSet = std::map<std::string, TrainedModel>;

// Reads <dir>/<algo>.json for every learning kind in the population, or the
// single file `path` when the population has one learning kind.
ModelSet LoadModels(const ScenarioConfig& config, const std::string& path);

// Bidders in population order. Throws ConfigError when a learning kind has
// no model.
std::vector<Participant> MakePopulation(
    const ScenarioConfig& config, std::uint64_t seed, const ModelSet& models,
    const std::shared_ptr<const nn::Networks>& nets);

struct RunResult {
  std::uint64_t seed = 0;
  std::vector<MetricRow> rows;
  std::vector<WindowSummary> windows;
  std::vector<std::string> algos;  // per bidder
  AuditCounters audits;
};

// One online run of `config.horizon` steps.
RunResult RunScenario(const ScenarioConfig& config, std::uint64_t seed,
                      const ModelSet& models,
                      const SimulationOptions& options = {});

// Population with `first_count` bidders of `first` and the rest of `rest`.
std::vector<PopulationGroup> MixPopulation(const std::string& first,
                                           int first_count,
                                           const std::string& rest, int total);

}  // namespace edgemarket::scenarios

#endif  // EDGEMARKET_SCENARIOS_EXPERIMENTS_H_
