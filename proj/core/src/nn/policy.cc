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

#include "edgemarket/nn/policy.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace edgemarket::nn {

PolicyNetwork::PolicyNetwork(const Architecture& arch, bool with_critic)
    : arch_(arch),
      with_critic_(with_critic),
      layout_(std::make_shared<ParamLayout>()) {
  trunk_ = Mlp(*layout_, "trunk", {arch.input_dim(), arch.hidden, arch.hidden},
               /*tanh_output=*/true);
  const int head_in = arch.hidden + arch.bid_feature_dim();
  backoff_w_ = layout_->Add("backoff.w", 1, head_in);
  backoff_b_ = layout_->Add("backoff.b", 1, 1);
  price_w_ = layout_->Add("price.w", arch.price_levels, head_in);
  price_b_ = layout_->Add("price.b", arch.price_levels, 1);
  if (with_critic_) {
    critic_w_ = layout_->Add("critic.w", 1, arch.hidden);
    critic_b_ = layout_->Add("critic.b", 1, 1);
  }
}

ParamVector PolicyNetwork::Zeros(ModuleTag tag) const {
  ParamVector p;
  p.tag = tag;
  p.layout = layout_;
  p.values.assign(layout_->total(), 0.0);
  return p;
}

void PolicyNetwork::Init(ParamVector& p, sim::Rng& rng) const {
  trunk_.Init(p, rng);
  const int head_in = arch_.hidden + arch_.bid_feature_dim();
  XavierInit(p.data(backoff_w_), 1, head_in, rng, 0.1);
  p.data(backoff_b_)[0] = 0.0;
  XavierInit(p.data(price_w_), arch_.price_levels, head_in, rng, 0.1);
  std::fill_n(p.data(price_b_), arch_.price_levels, 0.0);
  if (with_critic_) {
    XavierInit(p.data(critic_w_), 1, arch_.hidden, rng, 0.1);
    p.data(critic_b_)[0] = 0.0;
  }
}

PolicyNetwork::Pass PolicyNetwork::Run(
    const ParamVector& p, std::span<const double> state,
    std::span<const std::vector<double>> bid_features) const {
  if (p.values.size() != layout_->total()) {
    throw std::invalid_argument("parameter vector does not fit policy layout");
  }
  Pass pass;
  trunk_.Forward(p, state, pass.trunk);
  const auto& phi = trunk_.Output(pass.trunk);
  const int head_in = arch_.hidden + arch_.bid_feature_dim();
  for (const auto& feat : bid_features) {
    if (static_cast<int>(feat.size()) != arch_.bid_feature_dim()) {
      throw std::invalid_argument("bid feature size mismatch");
    }
    std::vector<double> in(phi);
    in.insert(in.end(), feat.begin(), feat.end());
    BidPolicy pol;
    double logit = 0.0;
    DenseForward(p.data(backoff_w_), p.data(backoff_b_), 1, head_in, in.data(),
                 &logit);
    pol.bid_prob = Sigmoid(logit);
    pol.level_probs.resize(arch_.price_levels);
    DenseForward(p.data(price_w_), p.data(price_b_), arch_.price_levels,
                 head_in, in.data(), pol.level_probs.data());
    SoftmaxInPlace(pol.level_probs);
    pass.head_inputs.push_back(std::move(in));
    pass.policies.push_back(std::move(pol));
  }
  if (with_critic_) {
    DenseForward(p.data(critic_w_), p.data(critic_b_), 1, arch_.hidden,
                 phi.data(), &pass.value);
  }
  return pass;
}

double PolicyNetwork::Value(const ParamVector& p,
                            std::span<const double> state) const {
  if (!with_critic_) return 0.0;
  Mlp::Cache cache;
  trunk_.Forward(p, state, cache);
  double v = 0.0;
  DenseForward(p.data(critic_w_), p.data(critic_b_), 1, arch_.hidden,
               trunk_.Output(cache).data(), &v);
  return v;
}

double PolicyNetwork::LogProb(const Pass& pass,
                              std::span<const BidAction> actions) {
  if (actions.size() != pass.policies.size()) {
    throw std::invalid_argument("one action per pipeline bid required");
  }
  double lp = 0.0;
  for (std::size_t j = 0; j < actions.size(); ++j) {
    const BidPolicy& pol = pass.policies[j];
    double prob = actions[j].bid ? pol.bid_prob : 1.0 - pol.bid_prob;
    if (actions[j].bid) prob *= pol.level_probs.at(actions[j].level);
    if (!(prob > 0.0)) {
      throw std::domain_error("action has zero probability under the policy");
    }
    lp += std::log(prob);
  }
  return lp;
}

void PolicyNetwork::Accumulate(const ParamVector& p, const Pass& pass,
                               std::span<const BidAction> actions,
                               double policy_scale, double value_scale,
                               Gradient& grad) const {
  if (actions.size() != pass.policies.size()) {
    throw std::invalid_argument("one action per pipeline bid required");
  }
  const int hidden = arch_.hidden;
  const int head_in = hidden + arch_.bid_feature_dim();
  const int levels = arch_.price_levels;
  std::vector<double> dphi(hidden, 0.0);
  std::vector<double> din(head_in);
  std::vector<double> dlogits(levels);
  if (policy_scale != 0.0) {
    for (std::size_t j = 0; j < actions.size(); ++j) {
      const BidPolicy& pol = pass.policies[j];
      const BidAction& a = actions[j];
      const double* in = pass.head_inputs[j].data();
      // d ln Bernoulli / d logit = alpha - sigma.
      const double dlogit = policy_scale * ((a.bid ? 1.0 : 0.0) - pol.bid_prob);
      DenseBackward(p.data(backoff_w_), 1, head_in, in, &dlogit,
                    grad.data(backoff_w_), grad.data(backoff_b_), din.data());
      for (int i = 0; i < hidden; ++i) dphi[i] += din[i];
      if (a.bid) {
        if (a.level < 0 || a.level >= levels) {
          throw std::out_of_range("price level outside the grid");
        }
        for (int l = 0; l < levels; ++l) {
          dlogits[l] = policy_scale * ((l == a.level ? 1.0 : 0.0) -
                                       pol.level_probs[l]);
        }
        DenseBackward(p.data(price_w_), levels, head_in, in, dlogits.data(),
                      grad.data(price_w_), grad.data(price_b_), din.data());
        for (int i = 0; i < hidden; ++i) dphi[i] += din[i];
      }
    }
  }
  if (with_critic_ && value_scale != 0.0) {
    const auto& phi = trunk_.Output(pass.trunk);
    std::vector<double> dphi_v(hidden);
    DenseBackward(p.data(critic_w_), 1, hidden, phi.data(), &value_scale,
                  grad.data(critic_w_), grad.data(critic_b_), dphi_v.data());
    for (int i = 0; i < hidden; ++i) dphi[i] += dphi_v[i];
  }
  trunk_.Backward(p, pass.trunk, dphi, grad, nullptr);
}

Gradient PolicyNetwork::GradLogPolicy(
    const ParamVector& p, std::span<const double> state,
    std::span<const std::vector<double>> bid_features,
    std::span<const BidAction> actions) const {
  Pass pass = Run(p, state, bid_features);
  LogProb(pass, actions);  // validates the support
  Gradient g = Gradient::ZerosLike(p);
  Accumulate(p, pass, actions, 1.0, 0.0, g);
  return g;
}

}  // namespace edgemarket::nn
