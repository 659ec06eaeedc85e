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

#ifndef EDGEMARKET_ORACLES_REWARD_ORACLE_H_
#define EDGEMARKET_ORACLES_REWARD_ORACLE_H_

#include <cstdint>
#include <functional>
#include <span>

#include "edgemarket/oracles/suite.h"

namespace edgemarket::oracles {

using FairnessFn = std::function<double(std::span<const double>)>;

// Property test over random nonnegative payment vectors: bounds
// [1/|M|, 1], invariance under positive scaling and permutation, agreement
// with mean^2 / mean-of-squares.
CheckResult CheckJainProperties(int vectors, std::uint64_t seed,
                                const FairnessFn& fairness = {});

// Hand-evaluated utility, scalarization, fairness, failure-rate and budget
// examples; every value must match exactly.
CheckResult CheckRewardExamples();

// Preference draws must satisfy the three pair constraints exactly.
CheckResult CheckPreferenceSimplex(int draws, std::uint64_t seed);

}  // namespace edgemarket::oracles

#endif  // EDGEMARKET_ORACLES_REWARD_ORACLE_H_
