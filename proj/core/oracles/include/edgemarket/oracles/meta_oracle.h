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

#ifndef EDGEMARKET_ORACLES_META_ORACLE_H_
#define EDGEMARKET_ORACLES_META_ORACLE_H_

#include <cstdint>
#include <vector>

#include "edgemarket/agent/moody_agent.h"
#include "edgemarket/nn/model.h"
#include "edgemarket/oracles/suite.h"

namespace edgemarket::oracles {

// Generic model plus the shot gradients of a short multi-agent run.
struct MetaCase {
  nn::ModelBundle theta0;
  // Submission order: shot-major, bidder order within a shot.
  std::vector<agent::ShotGradient> gradients;
  std::vector<int> submitters;
  double meta_rate = 0.1;
};

// Runs `agents` MOODY learners on a tiny network for `tau` windows of the
// training scenario and records every shot gradient.
MetaCase RecordMetaCase(int agents, int tau, std::uint64_t seed);

// theta0 + rate * sum(g), summed coordinate by coordinate in submission
// order.
nn::ModelBundle DirectSum(const MetaCase& c);

// Feeds the gradients to a Coordinator and compares its state with
// DirectSum within 1e-10 relative tolerance; a second identical run must be
// bit-identical.
CheckResult CheckMetaEquivalence(int agents, int tau, std::uint64_t seed);

}  // namespace edgemarket::oracles

#endif  // EDGEMARKET_ORACLES_META_ORACLE_H_
