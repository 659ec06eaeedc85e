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

#ifndef EDGEMARKET_AGENT_FSP_H_
#define EDGEMARKET_AGENT_FSP_H_

#include "edgemarket/simcore/clock.h"

namespace edgemarket::agent {

// Probability of acting with the best response:
// eta(t) = 1 - eta0 * exp(-t / horizon).
struct FspSchedule {
  double eta0 = 0.9;
  double horizon = 20000.0;
  // Fixed eta in [0, 1] overrides the schedule when >= 0.
  double fixed = -1.0;

  double Eta(sim::Step t) const;
};

}  // namespace edgemarket::agent

#endif  // EDGEMARKET_AGENT_FSP_H_
