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

#include "edgemarket/nn/curiosity_net.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace edgemarket::nn {

CuriosityNetwork::CuriosityNetwork(const Architecture& arch)
    : arch_(arch), layout_(std::make_shared<ParamLayout>()) {
  forward_ = Mlp(*layout_, "forward",
                 {arch.input_dim() + arch.action_classes(),
                  arch.curiosity_hidden, arch.state_dim()},
                 /*tanh_output=*/false);
  inverse_ = Mlp(*layout_, "inverse",
                 {2 * arch.state_dim(), arch.curiosity_hidden,
                  arch.action_classes()},
                 /*tanh_output=*/false);
}

ParamVector CuriosityNetwork::Zeros() const {
  ParamVector p;
  p.tag = ModuleTag::kCuriosity;
  p.layout = layout_;
  p.values.assign(layout_->total(), 0.0);
  return p;
}

void CuriosityNetwork::Init(ParamVector& p, sim::Rng& rng) const {
  forward_.Init(p, rng, 0.5);
  inverse_.Init(p, rng, 0.5);
}

std::vector<double> CuriosityNetwork::ForwardInput(
    std::span<const double> stacked, int action) const {
  if (action < 0 || action >= arch_.action_classes()) {
    throw std::out_of_range("action class outside range");
  }
  std::vector<double> in(stacked.begin(), stacked.end());
  in.resize(in.size() + arch_.action_classes(), 0.0);
  in[stacked.size() + action] = 1.0;
  return in;
}

std::vector<double> CuriosityNetwork::PredictNext(
    const ParamVector& p, std::span<const double> stacked, int action) const {
  Mlp::Cache cache;
  forward_.Forward(p, ForwardInput(stacked, action), cache);
  return forward_.Output(cache);
}

double CuriosityNetwork::ForwardLoss(const ParamVector& p,
                                     std::span<const double> stacked,
                                     int action,
                                     std::span<const double> next_state,
                                     double scale, Gradient* grad) const {
  if (static_cast<int>(next_state.size()) != arch_.state_dim()) {
    throw std::invalid_argument("next state size mismatch");
  }
  Mlp::Cache cache;
  forward_.Forward(p, ForwardInput(stacked, action), cache);
  const auto& pred = forward_.Output(cache);
  const double n = static_cast<double>(pred.size());
  double loss = 0.0;
  std::vector<double> dout(pred.size());
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const double e = pred[i] - next_state[i];
    loss += e * e / n;
    dout[i] = scale * 2.0 * e / n;
  }
  if (grad != nullptr) forward_.Backward(p, cache, dout, *grad, nullptr);
  return loss;
}

std::vector<double> CuriosityNetwork::PredictAction(
    const ParamVector& p, std::span<const double> state,
    std::span<const double> next_state) const {
  std::vector<double> in(state.begin(), state.end());
  in.insert(in.end(), next_state.begin(), next_state.end());
  Mlp::Cache cache;
  inverse_.Forward(p, in, cache);
  std::vector<double> probs = inverse_.Output(cache);
  SoftmaxInPlace(probs);
  return probs;
}

double CuriosityNetwork::InverseLoss(const ParamVector& p,
                                     std::span<const double> state,
                                     std::span<const double> next_state,
                                     int action, double scale,
                                     Gradient* grad) const {
  if (action < 0 || action >= arch_.action_classes()) {
    throw std::out_of_range("action class outside range");
  }
  std::vector<double> in(state.begin(), state.end());
  in.insert(in.end(), next_state.begin(), next_state.end());
  Mlp::Cache cache;
  inverse_.Forward(p, in, cache);
  std::vector<double> probs = inverse_.Output(cache);
  SoftmaxInPlace(probs);
  const double loss = -std::log(std::max(probs[action], 1e-300));
  if (grad != nullptr) {
    std::vector<double> dout(probs.size());
    for (std::size_t c = 0; c < probs.size(); ++c) {
      dout[c] = scale * (probs[c] - (static_cast<int>(c) == action ? 1.0 : 0.0));
    }
    inverse_.Backward(p, cache, dout, *grad, nullptr);
  }
  return loss;
}

}  // namespace edgemarket::nn
