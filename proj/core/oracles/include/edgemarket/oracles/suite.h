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

#ifndef EDGEMARKET_ORACLES_SUITE_H_
#define EDGEMARKET_ORACLES_SUITE_H_

#include <cstdint>
#include <string>
#include <vector>

namespace edgemarket::oracles {

// Outcome of one oracle check. `detail` carries the first mismatch or the
// measured statistic on success.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  // "payment-rule" swaps in a first-price auction, "gradient" perturbs every
  // analytic gradient; used to show the oracles catch real bugs.
  std::string inject;
};

// Auction, gradient, meta-equivalence, reward, Jain, preference and trigger
// checks at their acceptance sizes.
std::vector<CheckResult> RunOracleSuite(const SuiteOptions& options);

}  // namespace edgemarket::oracles

#endif  // EDGEMARKET_ORACLES_SUITE_H_
