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

#include "edgemarket/scenarios/experiments.h"

#include <filesystem>
#include <set>
#include <stdexcept>

#include "edgemarket/baselines/factory.h"

namespace edgemarket::scenarios {
namespace {

std::set<std::string> LearningKinds(const ScenarioConfig& config) {
  std::set<std::string> kinds;
  for (const PopulationGroup& g : config.population) {
    if (g.count > 0 &&
        baselines::IsLearner(baselines::ParseBidderKind(g.algo))) {
      kinds.insert(g.algo);
    }
  }
  return kinds;
}

}  // namespace

ModelSet LoadModels(const ScenarioConfig& config, const std::string& path) {
  const std::set<std::string> kinds = LearningKinds(config);
  ModelSet models;
  if (kinds.empty()) return models;
  const nn::Networks nets(config.architecture);
  namespace fs = std::filesystem;
  const bool is_dir = fs::is_directory(path);
  if (!is_dir && kinds.size() > 1) {
    throw ConfigError("population has several learning kinds; --checkpoint "
                      "must be a directory holding <algo>.json files");
  }
  for (const std::string& algo : kinds) {
    const std::string file =
        is_dir ? (fs::path(path) / (algo + ".json")).string() : path;
    std::map<std::string, std::string> meta;
    TrainedModel tm;
    tm.model = nn::LoadCheckpoint(file, nets, &meta);
    if (auto it = meta.find("trained_steps"); it != meta.end()) {
      tm.trained_steps = std::stoll(it->second);
    }
    models.emplace(algo, std::move(tm));
  }
  return models;
}

std::vector<Participant> MakePopulation(
    const ScenarioConfig& config, std::uint64_t seed, const ModelSet& models,
    const std::shared_ptr<const nn::Networks>& nets) {
  const sim::RngStreams streams(seed);
  std::vector<Participant> out;
  int m = 0;
  for (const PopulationGroup& g : config.population) {
    const baselines::BidderKind kind = baselines::ParseBidderKind(g.algo);
    baselines::BidderContext ctx{.config = &config,
                                 .phase = baselines::Phase::kDeployment};
    if (baselines::IsLearner(kind)) {
      auto it = models.find(g.algo);
      if (it == models.end()) {
        throw ConfigError("no trained model for algorithm '" + g.algo + "'");
      }
      ctx.nets = nets;
      ctx.model = &it->second.model;
      ctx.fsp_offset = it->second.trained_steps;
    }
    for (int i = 0; i < g.count; ++i, ++m) {
      out.push_back(Participant{
          .bidder = baselines::MakeBidder(
              kind, ctx, streams.Get(sim::Stream::kExploration, m)),
          .constant_preference = baselines::UsesConstantPreference(kind)});
    }
  }
  return out;
}

RunResult RunScenario(const ScenarioConfig& config, std::uint64_t seed,
                      const ModelSet& models,
                      const SimulationOptions& options) {
  auto nets = std::make_shared<const nn::Networks>(config.architecture);
  Simulation sim(config, seed, MakePopulation(config, seed, models, nets),
                 options);
  sim.Run(config.horizon);
  sim.FinishMetrics();
  RunResult r;
  r.seed = seed;
  r.rows = sim.metrics();
  r.windows = sim.windows();
  r.audits = sim.audits();
  for (int m = 0; m < sim.num_bidders(); ++m) {
    r.algos.emplace_back(sim.bidder(m).algo());
  }
  return r;
}

std::vector<PopulationGroup> MixPopulation(const std::string& first,
                                           int first_count,
                                           const std::string& rest,
                                           int total) {
  if (first_count < 0 || first_count > total) {
    throw ConfigError("mix count out of range");
  }
  std::vector<PopulationGroup> groups;
  if (first_count > 0) groups.push_back({first, first_count});
  if (total - first_count > 0) groups.push_back({rest, total - first_count});
  return groups;
}

}  // namespace edgemarket::scenarios
