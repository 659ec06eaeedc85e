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

#include "edgemarket/oracles/suite.h"

#include "edgemarket/oracles/auction_oracle.h"
#include "edgemarket/oracles/gradient_oracle.h"
#include "edgemarket/oracles/meta_oracle.h"
#include "edgemarket/oracles/reward_oracle.h"
#include "edgemarket/oracles/trigger_oracle.h"

namespace edgemarket::oracles {

std::vector<CheckResult> RunOracleSuite(const SuiteOptions& options) {
  const std::uint64_t seed = options.seed;
  std::vector<CheckResult> out;
  if (options.inject == "payment-rule") {
    out.push_back(CheckAuction(10000, seed, FirstPriceAuction));
  } else {
    out.push_back(CheckAuction(10000, seed));
  }
  GradientMutation mutate;
  if (options.inject == "gradient") {
    mutate = [](nn::Gradient& g) {
      for (double& v : g.values) v *= 1.01;
    };
  }
  out.push_back(CheckModuleGradients(3, seed, 1e-4, mutate));
  out.push_back(CheckMetaEquivalence(3, 3, seed));
  out.push_back(CheckRewardExamples());
  out.push_back(CheckPreferenceSimplex(10000, seed));
  out.push_back(CheckJainProperties(10000, seed));
  out.push_back(CheckRetrainTriggers());
  return out;
}

}  // namespace edgemarket::oracles
