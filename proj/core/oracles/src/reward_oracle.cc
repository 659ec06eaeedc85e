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

#include "edgemarket/oracles/reward_oracle.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <vector>

#include "edgemarket/rewards/objectives.h"
#include "edgemarket/rewards/preference.h"
#include "edgemarket/simcore/rng.h"

namespace edgemarket::oracles {
namespace {

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

bool Close(double a, double b, double rel = 1e-12) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

CheckResult CheckJainProperties(int vectors, std::uint64_t seed,
                                const FairnessFn& fairness) {
  const auto start = std::chrono::steady_clock::now();
  const FairnessFn jain =
      fairness ? fairness : [](std::span<const double> p) {
        return rewards::JainFairness(p);
      };
  CheckResult result{"jain", true, "", 0.0};
  sim::Rng rng(seed);
  for (int it = 0; it < vectors && result.passed; ++it) {
    const int m = 1 + static_cast<int>(rng.UniformInt(12));
    std::vector<double> p(m);
    for (double& x : p) {
      // Mix exact zeros in so concentrated vectors are exercised.
      x = rng.Bernoulli(0.3) ? 0.0 : rng.Uniform(0.0, 10.0);
    }
    if (std::all_of(p.begin(), p.end(), [](double x) { return x == 0.0; })) {
      p[rng.UniformInt(m)] = rng.Uniform(0.1, 10.0);
    }
    const double j = jain(p);

    double sum = 0.0, sq = 0.0;
    for (double x : p) {
      sum += x;
      sq += x * x;
    }
    const double mean = sum / m;
    const double reference = mean * mean / (sq / m);

    const double lambda = rng.Uniform(0.01, 100.0);
    std::vector<double> scaled(p);
    for (double& x : scaled) x *= lambda;
    std::vector<double> shuffled(p);
    for (int i = m - 1; i > 0; --i) {
      std::swap(shuffled[i], shuffled[rng.UniformInt(i + 1)]);
    }

    std::string failure;
    if (j < 1.0 / m - 1e-12 || j > 1.0 + 1e-12) failure = "out of bounds";
    else if (!Close(j, reference)) failure = "formula mismatch";
    else if (!Close(jain(scaled), j)) failure = "not scale invariant";
    else if (!Close(jain(shuffled), j)) failure = "not symmetric";
    if (!failure.empty()) {
      std::ostringstream os;
      os << failure << " on vector " << it << " (|M|=" << m << ", J=" << j
         << ")";
      result.passed = false;
      result.detail = os.str();
    }
  }
  if (result.passed) {
    result.detail = std::to_string(vectors) + " vectors satisfy all properties";
  }
  result.seconds = Seconds(start);
  return result;
}

CheckResult CheckRewardExamples() {
  const auto start = std::chrono::steady_clock::now();
  CheckResult result{"reward-examples", true, "", 0.0};
  int checked = 0;
  auto expect = [&](const char* what, double got, double want) {
    ++checked;
    if (result.passed && got != want) {
      std::ostringstream os;
      os << what << ": got " << got << ", want " << want;
      result.passed = false;
      result.detail = os.str();
    }
  };

  rewards::PreferenceVector half;  // every weight 0.5
  {
    rewards::BidUtilityTerms t{.alpha = 1, .won = 1, .valuation = 10,
                               .payment = 6};
    expect("utility win", rewards::AuctionUtility(t, half), 4.0);
  }
  {
    rewards::BidUtilityTerms t{.alpha = 0, .backoff_cost = 2};
    expect("utility backoff", rewards::AuctionUtility(t, half), -1.0);
  }
  {
    rewards::BidUtilityTerms t{.alpha = 1, .won = 0, .loss_cost = 10};
    expect("utility loss", rewards::AuctionUtility(t, half), -5.0);
  }
  {
    rewards::BidUtilityTerms t{.alpha = 0, .won = 1};
    expect("utility free backoff", rewards::AuctionUtility(t, half), 0.0);
  }
  {
    rewards::PreferenceVector w = half;
    w.utility = 1.0;
    w.utilization = 0.0;
    rewards::ObjectiveSignals s{.utility = 3.25, .utilization = 0.7};
    expect("scalarization degenerate", rewards::ExtrinsicReward(s, w), 3.25);
  }
  {
    rewards::PreferenceVector w = half;
    w.utility = 0.6;
    w.utilization = 0.4;
    rewards::ObjectiveSignals s{.utility = 2.0, .utilization = 0.5};
    expect("scalarization short-term", rewards::ExtrinsicReward(s, w), 1.4);
  }
  {
    rewards::PreferenceVector w = half;
    rewards::ObjectiveSignals s{.utility = 0.0, .utilization = 0.0,
                                .failure_rate = 0.2, .fairness = 0.9};
    expect("scalarization long-term", rewards::ExtrinsicReward(s, w), 0.35);
  }
  {
    const std::vector<double> even{3, 3, 3}, single{6, 0, 0}, skew{2, 1, 1};
    expect("jain even", rewards::JainFairness(even), 1.0);
    expect("jain single", rewards::JainFairness(single), 1.0 / 3.0);
    expect("jain skew", rewards::JainFairness(skew), 16.0 / 18.0);
  }
  {
    rewards::RequestCounters c{.successes = 8, .final_losses = 2};
    expect("ofr", rewards::OffloadingFailureRate(c, 0.0).value, 0.2);
  }
  {
    rewards::BidderAccount a;
    a.budget = 5;
    rewards::UpdateBudget(a, 3);
    expect("budget gain", a.budget, 8.0);
    a.budget = 5;
    const bool reset = rewards::UpdateBudget(a, -7);
    expect("budget reset", reset ? a.budget : -1.0, a.initial_wealth);
    a.budget = 1;
    expect("budget boundary", rewards::UpdateBudget(a, -1) ? 1.0 : 0.0, 1.0);
  }
  if (result.passed) {
    result.detail = std::to_string(checked) + " hand-evaluated values match";
  }
  result.seconds = Seconds(start);
  return result;
}

CheckResult CheckPreferenceSimplex(int draws, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult result{"preference-simplex", true, "", 0.0};
  sim::Rng rng(seed);
  for (int i = 0; i < draws; ++i) {
    const rewards::PreferenceVector w = rewards::SamplePreferences(rng);
    if (!w.SatisfiesSimplex(0.0)) {
      result.passed = false;
      result.detail = "draw " + std::to_string(i) + " violates a pair sum";
      break;
    }
  }
  if (result.passed) {
    result.detail = std::to_string(draws) + " draws satisfy all pair sums";
  }
  result.seconds = Seconds(start);
  return result;
}

}  // namespace edgemarket::oracles
