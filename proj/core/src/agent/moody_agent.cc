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

#include "edgemarket/agent/moody_agent.h"

#include <cmath>
#include <stdexcept>

namespace edgemarket::agent {

std::vector<nn::BidAction> SampleActions(const nn::PolicyNetwork::Pass& pass,
                                         sim::Rng& rng) {
  std::vector<nn::BidAction> actions;
  actions.reserve(pass.policies.size());
  for (const nn::BidPolicy& pol : pass.policies) {
    nn::BidAction a;
    a.bid = rng.Bernoulli(pol.bid_prob);
    // The level is drawn either way so the stream advances identically.
    a.level = static_cast<int>(rng.Categorical(pol.level_probs));
    if (!a.bid) a.level = 0;
    actions.push_back(a);
  }
  return actions;
}

MoodyAgent::MoodyAgent(AgentConfig config,
                       std::shared_ptr<const nn::Networks> nets,
                       nn::ModelBundle init, sim::Rng exploration)
    : config_(std::move(config)),
      nets_(std::move(nets)),
      model_(std::move(init)),
      rng_(exploration),
      stack_(nets_->arch.stack_depth, nets_->arch.state_dim()),
      memory_(config_.memory_capacity),
      monitor_(config_.monitor_size, config_.retrain_shots) {
  if (!(model_.arch == nets_->arch)) {
    throw std::invalid_argument("model does not match the network config");
  }
  if (config_.state.num_types() != nets_->arch.num_types) {
    throw std::invalid_argument("state config and architecture disagree");
  }
}

void MoodyAgent::LoadModel(const nn::ModelBundle& model) {
  if (!(model.arch == nets_->arch)) {
    throw std::invalid_argument("model does not match the network config");
  }
  model_ = model;
}

double MoodyAgent::Eta(sim::Step now) const {
  return config_.fsp.Eta(now + config_.fsp_offset);
}

void MoodyAgent::CompletePending(const std::vector<double>& state,
                                 const std::vector<double>& stacked) {
  MemoryEntry* e = memory_.Pending();
  if (e == nullptr) return;
  e->next_state = state;
  e->next_stacked = stacked;
  e->complete = true;
  if (config_.modules.curiosity) {
    e->forward_loss = nets_->curiosity.ForwardLoss(
        model_.curiosity, e->stacked, e->action_class, state, 0.0, nullptr);
    e->inverse_loss = nets_->curiosity.InverseLoss(
        model_.curiosity, e->state, state, e->action_class, 0.0, nullptr);
  }
  if (e->labeled) e->intrinsic = e->epsilon * e->extrinsic + e->forward_loss;
}

Decision MoodyAgent::Act(const Observation& obs) {
  if (obs.pipeline.empty()) return {};
  std::vector<double> state = BuildState(obs, config_.state);
  stack_.Push(state);
  std::vector<double> stacked = stack_.Stacked();
  CompletePending(state, stacked);

  std::vector<std::vector<double>> feats;
  feats.reserve(obs.pipeline.size());
  for (const PipelineBid& b : obs.pipeline) {
    feats.push_back(BidFeatures(b, obs.now, config_.state));
  }
  const bool best =
      !config_.modules.fsp || rng_.Bernoulli(Eta(obs.now));
  const nn::PolicyNetwork::Pass pass =
      best ? nets_->actor_critic.Run(model_.actor_critic, stacked, feats)
           : nets_->behavioral.Run(model_.supervised, stacked, feats);
  Decision d = ApplyBudgetMask(SampleActions(pass, rng_), obs.pipeline,
                               nets_->arch.price_levels, obs.previous_wealth);

  MemoryEntry e;
  e.step = obs.now;
  e.state = std::move(state);
  e.stacked = std::move(stacked);
  e.bid_features = std::move(feats);
  e.actions = d.actions;
  const nn::BidAction& urgent = d.actions[MostUrgent(obs.pipeline)];
  e.action_class = urgent.bid ? 1 + urgent.level : 0;
  e.best_response = best;
  memory_.Push(std::move(e));

  ++stats_.decisions;
  if (best) ++stats_.best_response_decisions;
  return d;
}

void MoodyAgent::Feedback(sim::Step now, double extrinsic_reward) {
  if (memory_.size() == 0) return;
  MemoryEntry& last = memory_.entries().back();
  if (last.step == now) last.extrinsic += extrinsic_reward;
}

void MoodyAgent::EndWindow(sim::Step now, double long_term_reward) {
  const sim::Step window_start = now - config_.window + 1;
  std::vector<MemoryEntry*> entries;
  for (MemoryEntry& e : memory_.entries()) {
    if (!e.labeled) entries.push_back(&e);
  }
  ShotRecord rec;
  rec.step = now;
  rec.shot = static_cast<int>(stats_.windows);
  rec.decisions = static_cast<long>(entries.size());
  ++stats_.windows;
  if (entries.empty()) {
    memory_.DropAllButPending();
    stats_.shots.push_back(rec);
    return;
  }

  const nn::Architecture& arch = nets_->arch;
  nn::CreditNetwork::Pass credit_pass;
  if (config_.modules.credit) {
    const auto segments = BuildSegments(
        entries, window_start, config_.window, arch.credit_segments,
        arch.state_dim(), arch.action_classes(), preference_.failure,
        preference_.fairness);
    credit_pass = nets_->credit.Run(model_.credit, segments);
    rec.credit_loss = nn::CreditNetwork::Loss(credit_pass, long_term_reward);
    RetroLabel(entries,
               EntryWeights(entries, credit_pass.attention, window_start,
                            config_.window),
               long_term_reward);
  } else {
    // The long-term reward belongs to the decision it is delivered with.
    RetroLabel(entries, std::vector<double>(entries.size(), 1.0), 0.0);
    MemoryEntry& last = *entries.back();
    last.extrinsic += long_term_reward;
    if (last.complete) last.intrinsic = last.extrinsic + last.forward_loss;
  }

  double reward_sum = 0.0;
  double fwd = 0.0, inv = 0.0;
  long complete = 0;
  for (const MemoryEntry* e : entries) {
    reward_sum += e->extrinsic;
    if (e->complete) {
      fwd += e->forward_loss;
      inv += e->inverse_loss;
      ++complete;
    }
  }
  rec.rl_reward = reward_sum / static_cast<double>(entries.size());
  if (config_.modules.curiosity && complete > 0) {
    rec.forward_loss = fwd / complete;
    rec.inverse_loss = inv / complete;
  }

  bool train = false;
  switch (config_.retrain) {
    case RetrainPolicy::kEveryWindow:
      train = true;
      break;
    case RetrainPolicy::kAdaptive:
      train = rec.credit_loss.has_value() && monitor_.Check(*rec.credit_loss);
      break;
    case RetrainPolicy::kFirstSteps:
      train = now < config_.retrain_until;
      break;
    case RetrainPolicy::kNever:
      break;
  }

  if (train) {
    const int shots =
        config_.retrain == RetrainPolicy::kEveryWindow ? 1
                                                       : monitor_.shots();
    for (int s = 0; s < shots; ++s) {
      nn::Gradient credit_grad = nn::Gradient::ZerosLike(model_.credit);
      if (config_.modules.credit) {
        if (s > 0) credit_pass = nets_->credit.Run(model_.credit,
                                                   credit_pass.inputs);
        nets_->credit.AccumulateLossGrad(model_.credit, credit_pass,
                                         long_term_reward, -1.0, credit_grad);
        nn::SgdStep(model_.credit, credit_grad, config_.learning.credit_rate);
      }
      TrainShot();
      last_gradient_.modules[3] = std::move(credit_grad);
    }
    if (config_.retrain != RetrainPolicy::kEveryWindow) {
      stats_.retrain_shots += shots;
    }
    rec.trained = true;
  }
  memory_.DropAllButPending();
  stats_.shots.push_back(rec);
}

long MoodyAgent::TrainShot() {
  const LearningConfig& lc = config_.learning;
  nn::Gradient ac_sum = nn::Gradient::ZerosLike(model_.actor_critic);
  nn::Gradient sl_sum = nn::Gradient::ZerosLike(model_.supervised);
  nn::Gradient cur_sum = nn::Gradient::ZerosLike(model_.curiosity);
  long n = 0;
  for (MemoryEntry& e : memory_.entries()) {
    if (!e.complete || !e.labeled) continue;
    const nn::PolicyNetwork::Pass pass =
        nets_->actor_critic.Run(model_.actor_critic, e.stacked, e.bid_features);
    const double v_next =
        nets_->actor_critic.Value(model_.actor_critic, e.next_stacked);
    const double delta = e.intrinsic + lc.gamma * v_next - pass.value;
    if (!std::isfinite(delta)) {
      ++stats_.skipped_updates;
      continue;
    }
    nn::Gradient g = nn::Gradient::ZerosLike(model_.actor_critic);
    nets_->actor_critic.Accumulate(model_.actor_critic, pass, e.actions,
                                   e.best_response ? delta : 0.0,
                                   lc.critic_weight * delta, g);
    if (nn::SgdStep(model_.actor_critic, g, lc.actor_rate)) {
      ac_sum.Add(g);
    } else {
      ++stats_.skipped_updates;
    }

    if (config_.modules.fsp && e.best_response) {
      const nn::PolicyNetwork::Pass sl_pass =
          nets_->behavioral.Run(model_.supervised, e.stacked, e.bid_features);
      nn::Gradient gs = nn::Gradient::ZerosLike(model_.supervised);
      nets_->behavioral.Accumulate(model_.supervised, sl_pass, e.actions, 1.0,
                                   0.0, gs);
      if (nn::SgdStep(model_.supervised, gs, lc.supervised_rate)) {
        sl_sum.Add(gs);
      }
    }

    if (config_.modules.curiosity) {
      nn::Gradient gc = nn::Gradient::ZerosLike(model_.curiosity);
      nets_->curiosity.ForwardLoss(model_.curiosity, e.stacked, e.action_class,
                                   e.next_state, -1.0, &gc);
      nets_->curiosity.InverseLoss(model_.curiosity, e.state, e.next_state,
                                   e.action_class, -1.0, &gc);
      if (nn::SgdStep(model_.curiosity, gc, lc.curiosity_rate)) {
        cur_sum.Add(gc);
      }
    }
    ++n;
  }
  if (n > 0) {
    const double inv = 1.0 / static_cast<double>(n);
    ac_sum.Scale(inv);
    sl_sum.Scale(inv);
    cur_sum.Scale(inv);
  }
  ++shots_trained_;
  last_gradient_.shot = shots_trained_;
  last_gradient_.modules = {std::move(ac_sum), std::move(sl_sum),
                            std::move(cur_sum),
                            nn::Gradient::ZerosLike(model_.credit)};
  return n;
}

}  // namespace edgemarket::agent
