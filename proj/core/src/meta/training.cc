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

#include "edgemarket/meta/training.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <stdexcept>

#include "edgemarket/agent/moody_agent.h"
#include "edgemarket/meta/coordinator.h"
#include "edgemarket/scenarios/simulation.h"

namespace edgemarket::meta {
namespace {

std::string Cell(const std::optional<double>& v) {
  if (!v) return "";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), *v);
  return std::string(buf, res.ptr);
}

// Returns a diagnostic when any logged value is non-finite or above the
// ceiling.
std::string CheckDivergence(const TrainingRow& row, double ceiling) {
  auto bad = [ceiling](const std::optional<double>& v) {
    return v && (!std::isfinite(*v) || std::abs(*v) > ceiling);
  };
  std::string which;
  if (!std::isfinite(row.rl_reward)) which = "rl_reward";
  if (bad(row.credit_loss)) which = "credit_loss";
  if (bad(row.forward_loss)) which = "forward_loss";
  if (bad(row.inverse_loss)) which = "inverse_loss";
  if (which.empty()) return "";
  return "training diverged: epoch " + std::to_string(row.epoch) + " agent " +
         std::to_string(row.agent) + " shot " + std::to_string(row.shot) +
         " " + which + " outside [-" + Cell(ceiling) + ", " + Cell(ceiling) +
         "]";
}

TrainingRow RowFrom(int epoch, int agent, int shot,
                    const agent::ShotRecord& rec) {
  return TrainingRow{.epoch = epoch,
                     .agent = agent,
                     .shot = shot,
                     .rl_reward = rec.rl_reward,
                     .credit_loss = rec.credit_loss,
                     .forward_loss = rec.forward_loss,
                     .inverse_loss = rec.inverse_loss};
}

std::vector<scenarios::Participant> MakeLearners(
    const scenarios::ScenarioConfig& config, baselines::BidderKind kind,
    std::uint64_t env_seed, const std::shared_ptr<const nn::Networks>& nets,
    const nn::ModelBundle& model, sim::Step fsp_offset) {
  const sim::RngStreams streams(env_seed);
  baselines::BidderContext ctx{.config = &config,
                               .phase = baselines::Phase::kOfflineTraining,
                               .nets = nets,
                               .model = &model,
                               .fsp_offset = fsp_offset};
  std::vector<scenarios::Participant> out;
  for (int m = 0; m < config.num_bidders(); ++m) {
    out.push_back(scenarios::Participant{
        .bidder = baselines::MakeBidder(
            kind, ctx, streams.Get(sim::Stream::kExploration, m)),
        .constant_preference = true});
  }
  return out;
}

scenarios::SimulationOptions QuietOptions() {
  scenarios::SimulationOptions o;
  o.record_metrics = false;
  return o;
}

}  // namespace

TrainingResult RunOfflineTraining(const scenarios::ScenarioConfig& config,
                                  std::uint64_t seed,
                                  baselines::BidderKind kind) {
  if (!baselines::IsLearner(kind)) {
    throw scenarios::ConfigError("only learning bidders can be trained");
  }
  scenarios::ValidateConfig(config);
  const sim::RngStreams streams(seed);
  auto nets = std::make_shared<const nn::Networks>(config.architecture);
  sim::Rng init_rng = streams.Get(sim::Stream::kLearningInit, 0);
  TrainingResult result;
  result.model = nn::InitModel(*nets, init_rng);

  const int tau = config.training.tau;
  const sim::Step epoch_steps = static_cast<sim::Step>(tau) * config.window;
  const double ceiling = config.training.loss_ceiling;

  if (kind == baselines::BidderKind::kDraco2Like) {
    // Independent learners: one long run, no parameter sharing.
    const sim::Step horizon = epoch_steps * config.training.epochs;
    const std::uint64_t env_seed =
        streams.SeedFor(sim::Stream::kLearningInit, 1);
    scenarios::Simulation sim(
        config, env_seed,
        MakeLearners(config, kind, env_seed, nets, result.model, 0),
        QuietOptions());
    for (sim::Step t = 0; t < horizon && !result.halted; ++t) {
      sim.Step();
      if ((t + 1) % config.window != 0) continue;
      const long w = (t + 1) / config.window - 1;
      for (int m = 0; m < sim.num_bidders(); ++m) {
        const TrainingRow row =
            RowFrom(static_cast<int>(w / tau), m, static_cast<int>(w % tau) + 1,
                    sim.bidder(m).stats().shots.back());
        result.rows.push_back(row);
        const std::string d = CheckDivergence(row, ceiling);
        if (!d.empty()) {
          result.halted = true;
          result.diagnostic = d;
        }
      }
      if ((w + 1) % tau == 0) ++result.epochs_completed;
    }
    result.model =
        dynamic_cast<agent::MoodyAgent&>(sim.bidder(0)).model();
    result.trained_steps = sim.now();
    return result;
  }

  Coordinator coordinator(result.model, config.training.meta_rate);
  for (int epoch = 0; epoch < config.training.epochs; ++epoch) {
    const nn::ModelBundle theta0 = coordinator.Snapshot();
    const std::uint64_t env_seed =
        streams.SeedFor(sim::Stream::kLearningInit, epoch + 1);
    scenarios::Simulation sim(
        config, env_seed,
        MakeLearners(config, kind, env_seed, nets, theta0,
                     epoch * epoch_steps),
        QuietOptions());
    sim.Run(epoch_steps);
    for (int m = 0; m < sim.num_bidders(); ++m) {
      auto& learner = dynamic_cast<agent::MoodyAgent&>(sim.bidder(m));
      const auto& shots = learner.stats().shots;
      for (std::size_t s = 0; s < shots.size(); ++s) {
        const TrainingRow row =
            RowFrom(epoch, m, static_cast<int>(s) + 1, shots[s]);
        result.rows.push_back(row);
        const std::string d = CheckDivergence(row, ceiling);
        if (!d.empty() && !result.halted) {
          result.halted = true;
          result.diagnostic = d;
        }
      }
      if (result.halted) break;
      const SubmitResult ack = coordinator.Submit(m, learner.last_shot_gradient());
      if (!ack.accepted) {
        result.halted = true;
        result.diagnostic = ack.diagnostic;
        break;
      }
    }
    result.trained_steps += epoch_steps;
    if (result.halted) break;
    ++result.epochs_completed;
  }
  result.model = coordinator.Snapshot();
  result.meta_updates = coordinator.updates();
  return result;
}

void WriteTrainingCsv(const std::vector<TrainingRow>& rows,
                      const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "epoch,agent,shot,rl_reward,credit_loss,forward_loss,inverse_loss\n";
  for (const TrainingRow& r : rows) {
    out << r.epoch << ',' << r.agent << ',' << r.shot << ','
        << Cell(r.rl_reward) << ',' << Cell(r.credit_loss) << ','
        << Cell(r.forward_loss) << ',' << Cell(r.inverse_loss) << '\n';
  }
}

std::map<std::string, std::string> CheckpointMetadata(
    const TrainingResult& result, baselines::BidderKind kind,
    std::uint64_t seed) {
  return {{"algo", std::string(baselines::BidderKindName(kind))},
          {"seed", std::to_string(seed)},
          {"epochs_completed", std::to_string(result.epochs_completed)},
          {"trained_steps", std::to_string(result.trained_steps)},
          {"meta_updates", std::to_string(result.meta_updates)},
          {"halted", result.halted ? "true" : "false"}};
}

}  // namespace edgemarket::meta
