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

#ifndef EDGEMARKET_NN_CREDIT_NET_H_
#define EDGEMARKET_NN_CREDIT_NET_H_

#include <memory>
#include <span>
#include <vector>

#include "edgemarket/nn/architecture.h"
#include "edgemarket/nn/params.h"
#include "edgemarket/simcore/rng.h"

namespace edgemarket::nn {

// Elman recurrent cell over a sequence of segment summaries with additive
// attention on the hidden states. The attention-weighted context predicts
// the long-term reward delivered at the end of the sequence.
//
//   h_t = tanh(Wx x_t + Wh h_{t-1} + b)
//   e_t = v . tanh(Wa h_t + ba),   a = softmax(e)
//   y   = wo . sum_t a_t h_t + bo
class CreditNetwork {
 public:
  explicit CreditNetwork(const Architecture& arch);

  struct Pass {
    std::vector<std::vector<double>> inputs;
    std::vector<std::vector<double>> hidden;  // hidden[0] is the zero state
    std::vector<std::vector<double>> score_hidden;
    std::vector<double> attention;
    std::vector<double> context;
    double prediction = 0.0;
  };

  std::shared_ptr<const ParamLayout> layout() const { return layout_; }
  int input_dim() const { return input_dim_; }
  ParamVector Zeros() const;
  void Init(ParamVector& p, sim::Rng& rng) const;

  // Throws std::invalid_argument on an empty sequence.
  Pass Run(const ParamVector& p,
           std::span<const std::vector<double>> sequence) const;

  // 0.5 * (prediction - target)^2
  static double Loss(const Pass& pass, double target);

  // Adds scale * dLoss/dtheta (backpropagation through time).
  void AccumulateLossGrad(const ParamVector& p, const Pass& pass,
                          double target, double scale, Gradient& grad) const;

 private:
  int input_dim_;
  int hidden_;
  int attn_;
  std::shared_ptr<ParamLayout> layout_;
  std::size_t wx_, wh_, b_, wa_, ba_, v_, wo_, bo_;
};

}  // namespace edgemarket::nn

#endif  // EDGEMARKET_NN_CREDIT_NET_H_
