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

#include "edgemarket/oracles/meta_oracle.h"

#include <chrono>
#include <cmath>
#include <memory>
#include <sstream>

#include "edgemarket/baselines/factory.h"
#include "edgemarket/meta/coordinator.h"
#include "edgemarket/scenarios/config.h"
#include "edgemarket/scenarios/simulation.h"

namespace edgemarket::oracles {
namespace {

scenarios::ScenarioConfig TinyScenario(int agents) {
  scenarios::ScenarioConfig c = scenarios::TrainPreset();
  c.population = {{"moody", agents}};
  c.window = 400;
  c.architecture.stack_depth = 2;
  c.architecture.hidden = 6;
  c.architecture.price_levels = 4;
  c.architecture.curiosity_hidden = 5;
  c.architecture.credit_hidden = 4;
  c.architecture.credit_attention = 3;
  c.architecture.credit_segments = 4;
  return c;
}

std::vector<double> Flatten(const nn::ModelBundle& m) {
  std::vector<double> out;
  for (const nn::ModuleTag tag : nn::kAllModules) {
    const auto& v = m.Get(tag).values;
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

}  // namespace

MetaCase RecordMetaCase(int agents, int tau, std::uint64_t seed) {
  const scenarios::ScenarioConfig config = TinyScenario(agents);
  const sim::RngStreams streams(seed);
  auto nets = std::make_shared<const nn::Networks>(config.architecture);
  sim::Rng init = streams.Get(sim::Stream::kLearningInit, 0);
  MetaCase out;
  out.theta0 = nn::InitModel(*nets, init);
  out.meta_rate = config.training.meta_rate;

  baselines::BidderContext ctx{.config = &config,
                               .phase = baselines::Phase::kOfflineTraining,
                               .nets = nets,
                               .model = &out.theta0,
                               .fsp_offset = 0};
  std::vector<scenarios::Participant> participants;
  for (int m = 0; m < agents; ++m) {
    participants.push_back(scenarios::Participant{
        .bidder = baselines::MakeBidder(
            baselines::BidderKind::kMoody, ctx,
            streams.Get(sim::Stream::kExploration, m)),
        .constant_preference = true});
  }
  scenarios::SimulationOptions options;
  options.record_metrics = false;
  scenarios::Simulation sim(config, seed, std::move(participants), options);

  std::vector<int> seen(agents, 0);
  for (int w = 0; w < tau; ++w) {
    sim.Run(sim.now() + config.window);
    for (int m = 0; m < agents; ++m) {
      const auto& learner = dynamic_cast<agent::MoodyAgent&>(sim.bidder(m));
      const agent::ShotGradient& g = learner.last_shot_gradient();
      if (g.shot == seen[m]) continue;
      seen[m] = g.shot;
      out.gradients.push_back(g);
      out.submitters.push_back(m);
    }
  }
  return out;
}

nn::ModelBundle DirectSum(const MetaCase& c) {
  nn::ModelBundle out = c.theta0;
  for (std::size_t i = 0; i < std::size(nn::kAllModules); ++i) {
    std::vector<double>& v = out.Get(nn::kAllModules[i]).values;
    for (std::size_t j = 0; j < v.size(); ++j) {
      double sum = 0.0;
      for (const agent::ShotGradient& g : c.gradients) {
        sum += g.modules[i].values[j];
      }
      v[j] = c.theta0.Get(nn::kAllModules[i]).values[j] + c.meta_rate * sum;
    }
  }
  return out;
}

CheckResult CheckMetaEquivalence(int agents, int tau, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult result{"meta-equivalence", true, "", 0.0};
  auto fail = [&](const std::string& why) {
    if (!result.passed) return;
    result.passed = false;
    result.detail = why;
  };

  const MetaCase c = RecordMetaCase(agents, tau, seed);
  meta::Coordinator first(c.theta0, c.meta_rate);
  for (std::size_t i = 0; i < c.gradients.size(); ++i) {
    first.Submit(c.submitters[i], c.gradients[i]);
  }
  const nn::ModelBundle state = first.Snapshot();
  if (first.updates() != static_cast<long>(c.gradients.size())) {
    fail("coordinator accepted " + std::to_string(first.updates()) + " of " +
         std::to_string(c.gradients.size()) + " gradients");
  }

  const std::vector<double> got = Flatten(state);
  const std::vector<double> want = Flatten(DirectSum(c));
  const std::vector<double> base = Flatten(c.theta0);
  double worst = 0.0;
  double moved = 0.0;
  for (std::size_t j = 0; j < got.size(); ++j) {
    const double rel = std::abs(got[j] - want[j]) /
                       std::max(std::abs(want[j]), 1.0);
    worst = std::max(worst, rel);
    moved = std::max(moved, std::abs(got[j] - base[j]));
  }
  if (!(worst <= 1e-10)) {
    std::ostringstream os;
    os << "max relative deviation from theta0 + rate * sum(g): " << worst;
    fail(os.str());
  }
  if (moved == 0.0) fail("gradients left theta0 unchanged");
  if (!meta::MetaUpdateEquivalent(c.theta0, c.gradients, c.meta_rate, state)) {
    fail("MetaUpdateEquivalent rejected the coordinator state");
  }

  const MetaCase again = RecordMetaCase(agents, tau, seed);
  meta::Coordinator second(again.theta0, again.meta_rate);
  for (std::size_t i = 0; i < again.gradients.size(); ++i) {
    second.Submit(again.submitters[i], again.gradients[i]);
  }
  if (Flatten(second.Snapshot()) != got) {
    fail("second run is not bit-identical");
  }

  if (result.passed) {
    std::ostringstream os;
    os << c.gradients.size() << " gradients, " << got.size()
       << " parameters, max relative deviation " << worst;
    result.detail = os.str();
  }
  result.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

}  // namespace edgemarket::oracles
