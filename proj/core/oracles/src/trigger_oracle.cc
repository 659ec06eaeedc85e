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

#include "edgemarket/oracles/trigger_oracle.h"

#include <chrono>
#include <sstream>

#include "edgemarket/agent/retrain_monitor.h"
#include "edgemarket/simcore/rng.h"

namespace edgemarket::oracles {

std::vector<bool> ReferenceTriggers(std::span<const double> losses,
                                    std::size_t window) {
  std::vector<bool> out;
  for (std::size_t i = 0; i < losses.size(); ++i) {
    const std::size_t first = i > window ? i - window : 0;
    if (i == first) {
      out.push_back(true);
      continue;
    }
    double sum = 0.0;
    for (std::size_t j = first; j < i; ++j) sum += losses[j];
    out.push_back(losses[i] > sum / static_cast<double>(i - first));
  }
  return out;
}

CheckResult CheckRetrainTriggers(const TriggerFn& monitor) {
  const auto start = std::chrono::steady_clock::now();
  constexpr std::size_t kWindow = 10;
  const TriggerFn run =
      monitor ? monitor : [](std::span<const double> losses) {
        agent::RetrainMonitor m(kWindow, 1);
        std::vector<bool> out;
        for (double l : losses) out.push_back(m.Check(l));
        return out;
      };

  std::vector<std::pair<std::string, std::vector<double>>> cases;
  {
    std::vector<double> v;
    for (int i = 10; i >= 1; --i) v.push_back(i);
    for (int i = 0; i < 10; ++i) v.push_back(1.0 - 0.05 * i);
    cases.emplace_back("improving", v);
  }
  {
    std::vector<double> v(10, 1.0);
    v.push_back(2.0);
    v.push_back(1.0);
    v.push_back(0.5);
    cases.emplace_back("spike", v);
  }
  {
    std::vector<double> v;
    for (int i = 0; i < 25; ++i) v.push_back(i % 2 == 0 ? 1.0 : 3.0);
    cases.emplace_back("oscillating", v);
  }
  {
    std::vector<double> v;
    for (int i = 0; i < 30; ++i) v.push_back(i < 15 ? 5.0 - 0.2 * i : 2.0 + i);
    cases.emplace_back("degrading", v);
  }
  sim::Rng rng(20260101);
  for (int r = 0; r < 50; ++r) {
    std::vector<double> v(5 + rng.UniformInt(60));
    for (double& x : v) x = rng.Uniform(0.0, 4.0);
    cases.emplace_back("random-" + std::to_string(r), v);
  }

  CheckResult result{"retrain-trigger", true, "", 0.0};
  long decisions = 0;
  long triggers = 0;
  for (const auto& [name, losses] : cases) {
    const std::vector<bool> want = ReferenceTriggers(losses, kWindow);
    const std::vector<bool> got = run(losses);
    decisions += static_cast<long>(want.size());
    for (bool t : want) triggers += t;
    if (got != want) {
      std::ostringstream os;
      os << name << ": pattern ";
      for (bool t : got) os << (t ? '1' : '0');
      os << ", expected ";
      for (bool t : want) os << (t ? '1' : '0');
      result.passed = false;
      result.detail = os.str();
      break;
    }
  }
  if (result.passed) {
    result.detail = std::to_string(cases.size()) + " sequences, " +
                    std::to_string(decisions) + " decisions, " +
                    std::to_string(triggers) + " triggers";
  }
  result.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

}  // namespace edgemarket::oracles
