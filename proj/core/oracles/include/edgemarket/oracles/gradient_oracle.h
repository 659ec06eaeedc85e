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

#ifndef EDGEMARKET_ORACLES_GRADIENT_ORACLE_H_
#define EDGEMARKET_ORACLES_GRADIENT_ORACLE_H_

#include <cstdint>
#include <functional>
#include <string>

#include "edgemarket/nn/params.h"
#include "edgemarket/oracles/suite.h"

namespace edgemarket::oracles {

struct FiniteDifferenceReport {
  std::size_t checked = 0;
  double max_relative_error = 0.0;
  std::size_t worst_index = 0;
  std::string worst_name;
};

// Relative error |a - n| / max(|a|, |n|, floor). The floor keeps coordinates
// whose true derivative is ~0 from amplifying round-off in the difference
// quotient.
inline constexpr double kRelativeErrorFloor = 1e-5;

// Compares `analytic` to central differences of `objective` at every
// coordinate of `params` (restored afterwards).
FiniteDifferenceReport CompareWithFiniteDifferences(
    nn::ParamVector& params,
    const std::function<double(const nn::ParamVector&)>& objective,
    const nn::Gradient& analytic, double step = 1e-5);

// Applied to every analytic gradient before comparison; a mutation test
// passes a function that corrupts it.
using GradientMutation = std::function<void(nn::Gradient&)>;

// Checks ln pi and V of the actor-critic, ln pi of the behavioral net, the
// curiosity forward and inverse losses and the credit loss, each at
// `initializations` random parameter draws of a small architecture.
CheckResult CheckModuleGradients(int initializations, std::uint64_t seed,
                                 double tolerance = 1e-4,
                                 const GradientMutation& mutate = {});

}  // namespace edgemarket::oracles

#endif  // EDGEMARKET_ORACLES_GRADIENT_ORACLE_H_
