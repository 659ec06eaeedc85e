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

#ifndef EDGEMARKET_NN_POLICY_H_
#define EDGEMARKET_NN_POLICY_H_

#include <memory>
#include <span>
#include <vector>

#include "edgemarket/nn/architecture.h"
#include "edgemarket/nn/dense.h"
#include "edgemarket/nn/params.h"
#include "edgemarket/simcore/rng.h"

namespace edgemarket::nn {

// Decision for one pipeline bid. `level` is meaningful only when bidding.
struct BidAction {
  bool bid = false;
  int level = 0;

  bool operator==(const BidAction&) const = default;
};

struct BidPolicy {
  double bid_prob = 0.5;           // Bernoulli parameter of alpha = 1
  std::vector<double> level_probs;  // categorical over the price grid
};

// Shared tanh feature extractor over the stacked state, followed by per-bid
// backoff and price heads that see [phi, bid features]. With a critic the
// value is a linear function of phi.
class PolicyNetwork {
 public:
  PolicyNetwork(const Architecture& arch, bool with_critic);

  struct Pass {
    Mlp::Cache trunk;
    std::vector<std::vector<double>> head_inputs;
    std::vector<BidPolicy> policies;
    double value = 0.0;
  };

  const Architecture& arch() const { return arch_; }
  bool with_critic() const { return with_critic_; }
  std::shared_ptr<const ParamLayout> layout() const { return layout_; }

  ParamVector Zeros(ModuleTag tag) const;
  void Init(ParamVector& p, sim::Rng& rng) const;

  Pass Run(const ParamVector& p, std::span<const double> state,
           std::span<const std::vector<double>> bid_features) const;

  // Value only; skips the heads.
  double Value(const ParamVector& p, std::span<const double> state) const;

  // ln pi(actions); throws std::domain_error if an action has probability 0.
  static double LogProb(const Pass& pass, std::span<const BidAction> actions);

  // grad += policy_scale * d ln pi / d theta + value_scale * dV / d theta.
  void Accumulate(const ParamVector& p, const Pass& pass,
                  std::span<const BidAction> actions, double policy_scale,
                  double value_scale, Gradient& grad) const;

  Gradient GradLogPolicy(const ParamVector& p, std::span<const double> state,
                         std::span<const std::vector<double>> bid_features,
                         std::span<const BidAction> actions) const;

 private:
  Architecture arch_;
  bool with_critic_;
  std::shared_ptr<ParamLayout> layout_;
  Mlp trunk_;
  std::size_t backoff_w_ = 0, backoff_b_ = 0;
  std::size_t price_w_ = 0, price_b_ = 0;
  std::size_t critic_w_ = 0, critic_b_ = 0;
};

}  // namespace edgemarket::nn

#endif  // EDGEMARKET_NN_POLICY_H_
