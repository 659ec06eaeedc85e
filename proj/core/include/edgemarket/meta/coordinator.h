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

#ifndef EDGEMARKET_META_COORDINATOR_H_
#define EDGEMARKET_META_COORDINATOR_H_

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "edgemarket/agent/moody_agent.h"
#include "edgemarket/nn/model.h"

namespace edgemarket::meta {

struct SubmitResult {
  bool accepted = false;
  std::string diagnostic;
  // Generic model right after this submission was applied.
  nn::ModelBundle snapshot;
};

// Holds the generic model and applies first-order meta updates as agents
// hand in their shot gradients: theta0 <- theta0 + rate * g, per module, on
// arrival. Only gradients cross this boundary.
class Coordinator {
 public:
  Coordinator(nn::ModelBundle initial, double meta_rate);

  // Safe to call from several threads; submissions are serialised.
  SubmitResult Submit(int agent, const agent::ShotGradient& gradient);

  nn::ModelBundle Snapshot() const;
  double meta_rate() const { return rate_; }
  long updates() const;
  long rejections() const;
  // Shot index of each agent's last accepted submission.
  std::map<int, int> registry() const;

 private:
  mutable std::mutex mu_;
  nn::ModelBundle theta_;
  double rate_;
  long updates_ = 0;
  long rejections_ = 0;
  std::map<int, int> last_shot_;
};

// Closed-form sum theta0 + rate * sum(g), accumulated in submission order.
nn::ModelBundle ApplyClosedForm(const nn::ModelBundle& theta0,
                                const std::vector<agent::ShotGradient>& grads,
                                double meta_rate);

// True when every parameter of `state` matches the closed form within
// `rel_tol`, relative to max(|expected|, 1).
bool MetaUpdateEquivalent(const nn::ModelBundle& theta0,
                          const std::vector<agent::ShotGradient>& grads,
                          double meta_rate, const nn::ModelBundle& state,
                          double rel_tol = 1e-10);

}  // namespace edgemarket::meta

#endif  // EDGEMARKET_META_COORDINATOR_H_
