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

#ifndef EDGEMARKET_ORACLES_TRIGGER_ORACLE_H_
#define EDGEMARKET_ORACLES_TRIGGER_ORACLE_H_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "edgemarket/oracles/suite.h"

namespace edgemarket::oracles {

// Recomputes the trigger decisions from scratch at every step: the mean of
// the last `window` losses before step i (all of them while fewer exist),
// and an unconditional trigger when there are none.
std::vector<bool> ReferenceTriggers(std::span<const double> losses,
                                    std::size_t window);

using TriggerFn = std::function<std::vector<bool>(std::span<const double>)>;

// Runs the deterministic sequences (improving, constant with spikes,
// oscillating, cold start) and random ones through RetrainMonitor with N=10
// and compares each decision with ReferenceTriggers. `monitor` substitutes
// the implementation under test.
CheckResult CheckRetrainTriggers(const TriggerFn& monitor = {});

}  // namespace edgemarket::oracles

#endif  // EDGEMARKET_ORACLES_TRIGGER_ORACLE_H_
