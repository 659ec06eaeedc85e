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

#include "edgemarket/nn/credit_net.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "edgemarket/nn/dense.h"

namespace edgemarket::nn {

CreditNetwork::CreditNetwork(const Architecture& arch)
    : input_dim_(arch.credit_input_dim()),
      hidden_(arch.credit_hidden),
      attn_(arch.credit_attention),
      layout_(std::make_shared<ParamLayout>()) {
  wx_ = layout_->Add("rnn.wx", hidden_, input_dim_);
  wh_ = layout_->Add("rnn.wh", hidden_, hidden_);
  b_ = layout_->Add("rnn.b", hidden_, 1);
  wa_ = layout_->Add("attn.w", attn_, hidden_);
  ba_ = layout_->Add("attn.b", attn_, 1);
  v_ = layout_->Add("attn.v", 1, attn_);
  wo_ = layout_->Add("out.w", 1, hidden_);
  bo_ = layout_->Add("out.b", 1, 1);
}

ParamVector CreditNetwork::Zeros() const {
  ParamVector p;
  p.tag = ModuleTag::kCredit;
  p.layout = layout_;
  p.values.assign(layout_->total(), 0.0);
  return p;
}

void CreditNetwork::Init(ParamVector& p, sim::Rng& rng) const {
  XavierInit(p.data(wx_), hidden_, input_dim_, rng);
  XavierInit(p.data(wh_), hidden_, hidden_, rng, 0.5);
  std::fill_n(p.data(b_), hidden_, 0.0);
  XavierInit(p.data(wa_), attn_, hidden_, rng);
  std::fill_n(p.data(ba_), attn_, 0.0);
  XavierInit(p.data(v_), 1, attn_, rng, 0.1);
  XavierInit(p.data(wo_), 1, hidden_, rng, 0.5);
  p.data(bo_)[0] = 0.0;
}

CreditNetwork::Pass CreditNetwork::Run(
    const ParamVector& p, std::span<const std::vector<double>> sequence) const {
  if (sequence.empty()) {
    throw std::invalid_argument("credit sequence is empty");
  }
  const std::size_t steps = sequence.size();
  Pass pass;
  pass.inputs.assign(sequence.begin(), sequence.end());
  pass.hidden.assign(steps + 1, std::vector<double>(hidden_, 0.0));
  pass.score_hidden.assign(steps, std::vector<double>(attn_, 0.0));
  pass.attention.assign(steps, 0.0);
  std::vector<double> rec(hidden_);
  for (std::size_t t = 0; t < steps; ++t) {
    if (static_cast<int>(sequence[t].size()) != input_dim_) {
      throw std::invalid_argument("credit input size mismatch");
    }
    auto& h = pass.hidden[t + 1];
    DenseForward(p.data(wx_), p.data(b_), hidden_, input_dim_,
                 sequence[t].data(), h.data());
    const std::vector<double> zero(hidden_, 0.0);
    DenseForward(p.data(wh_), zero.data(), hidden_, hidden_,
                 pass.hidden[t].data(), rec.data());
    for (int i = 0; i < hidden_; ++i) h[i] = std::tanh(h[i] + rec[i]);
    auto& u = pass.score_hidden[t];
    DenseForward(p.data(wa_), p.data(ba_), attn_, hidden_, h.data(), u.data());
    double e = 0.0;
    for (int i = 0; i < attn_; ++i) {
      u[i] = std::tanh(u[i]);
      e += p.data(v_)[i] * u[i];
    }
    pass.attention[t] = e;
  }
  SoftmaxInPlace(pass.attention);
  pass.context.assign(hidden_, 0.0);
  for (std::size_t t = 0; t < steps; ++t) {
    for (int i = 0; i < hidden_; ++i) {
      pass.context[i] += pass.attention[t] * pass.hidden[t + 1][i];
    }
  }
  DenseForward(p.data(wo_), p.data(bo_), 1, hidden_, pass.context.data(),
               &pass.prediction);
  return pass;
}

double CreditNetwork::Loss(const Pass& pass, double target) {
  const double e = pass.prediction - target;
  return 0.5 * e * e;
}

void CreditNetwork::AccumulateLossGrad(const ParamVector& p, const Pass& pass,
                                       double target, double scale,
                                       Gradient& grad) const {
  const std::size_t steps = pass.attention.size();
  const double dy = scale * (pass.prediction - target);
  std::vector<double> dctx(hidden_);
  DenseBackward(p.data(wo_), 1, hidden_, pass.context.data(), &dy,
                grad.data(wo_), grad.data(bo_), dctx.data());

  // Softmax backward: de_t = a_t (da_t - sum_s a_s da_s), da_t = dctx . h_t.
  std::vector<double> da(steps);
  double mean = 0.0;
  for (std::size_t t = 0; t < steps; ++t) {
    double s = 0.0;
    for (int i = 0; i < hidden_; ++i) s += dctx[i] * pass.hidden[t + 1][i];
    da[t] = s;
    mean += pass.attention[t] * s;
  }

  std::vector<std::vector<double>> dh(steps, std::vector<double>(hidden_));
  std::vector<double> du(attn_);
  std::vector<double> dh_score(hidden_);
  const double* v = p.data(v_);
  for (std::size_t t = 0; t < steps; ++t) {
    const double de = pass.attention[t] * (da[t] - mean);
    const auto& u = pass.score_hidden[t];
    for (int i = 0; i < attn_; ++i) {
      grad.data(v_)[i] += de * u[i];
      du[i] = de * v[i] * (1.0 - u[i] * u[i]);
    }
    DenseBackward(p.data(wa_), attn_, hidden_, pass.hidden[t + 1].data(),
                  du.data(), grad.data(wa_), grad.data(ba_), dh_score.data());
    for (int i = 0; i < hidden_; ++i) {
      dh[t][i] = pass.attention[t] * dctx[i] + dh_score[i];
    }
  }

  std::vector<double> carry(hidden_, 0.0);
  std::vector<double> dz(hidden_);
  std::vector<double> scratch(hidden_);
  std::vector<double> dprev(hidden_);
  for (std::size_t t = steps; t-- > 0;) {
    const auto& h = pass.hidden[t + 1];
    for (int i = 0; i < hidden_; ++i) {
      dz[i] = (dh[t][i] + carry[i]) * (1.0 - h[i] * h[i]);
    }
    DenseBackward(p.data(wx_), hidden_, input_dim_, pass.inputs[t].data(),
                  dz.data(), grad.data(wx_), grad.data(b_), nullptr);
    std::fill(scratch.begin(), scratch.end(), 0.0);
    DenseBackward(p.data(wh_), hidden_, hidden_, pass.hidden[t].data(),
                  dz.data(), grad.data(wh_), scratch.data(), dprev.data());
    carry = dprev;
  }
}

}  // namespace edgemarket::nn
