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

#ifndef EDGEMARKET_NN_CURIOSITY_NET_H_
#define EDGEMARKET_NN_CURIOSITY_NET_H_

#include <memory>
#include <span>
#include <vector>

#include "edgemarket/nn/architecture.h"
#include "edgemarket/nn/dense.h"
#include "edgemarket/nn/params.h"
#include "edgemarket/simcore/rng.h"

namespace edgemarket::nn {

// Forward model: (stacked state, action class) -> next state.
// Inverse model: (state, next state) -> action class.
class CuriosityNetwork {
 public:
  explicit CuriosityNetwork(const Architecture& arch);

  std::shared_ptr<const ParamLayout> layout() const { return layout_; }
  ParamVector Zeros() const;
  void Init(ParamVector& p, sim::Rng& rng) const;

  std::vector<double> PredictNext(const ParamVector& p,
                                  std::span<const double> stacked,
                                  int action) const;

  // Mean squared error of the next-state prediction. When grad is non-null,
  // adds scale * dL/dtheta.
  double ForwardLoss(const ParamVector& p, std::span<const double> stacked,
                     int action, std::span<const double> next_state,
                     double scale, Gradient* grad) const;

  std::vector<double> PredictAction(const ParamVector& p,
                                    std::span<const double> state,
                                    std::span<const double> next_state) const;

  // Cross-entropy of the true action class.
  double InverseLoss(const ParamVector& p, std::span<const double> state,
                     std::span<const double> next_state, int action,
                     double scale, Gradient* grad) const;

 private:
  std::vector<double> ForwardInput(std::span<const double> stacked,
                                   int action) const;

  Architecture arch_;
  std::shared_ptr<ParamLayout> layout_;
  Mlp forward_;
  Mlp inverse_;
};

}  // namespace edgemarket::nn

#endif  // EDGEMARKET_NN_CURIOSITY_NET_H_
