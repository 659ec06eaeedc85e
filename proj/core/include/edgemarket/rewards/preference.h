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

#ifndef EDGEMARKET_REWARDS_PREFERENCE_H_
#define EDGEMARKET_REWARDS_PREFERENCE_H_

#include <array>

#include "edgemarket/simcore/clock.h"
#include "edgemarket/simcore/rng.h"

namespace edgemarket::rewards {

// Objective weights. Pairs sum to one:
//   utility (o1) + utilization (o3), failure rate (o2) + fairness (o4),
//   losing-cost (o1-2) + backoff-cost (o1-3).
struct PreferenceVector {
  double utility = 0.5;
  double failure = 0.5;
  double utilization = 0.5;
  double fairness = 0.5;
  double loss_cost = 0.5;
  double backoff_cost = 0.5;

  // Builds the three complementary pairs from u1, u2, u3 in [0, 1].
  static PreferenceVector FromDraws(double u1, double u2, double u3);

  bool SatisfiesSimplex(double tol = 0.0) const;
};

PreferenceVector SamplePreferences(sim::Rng& rng);

// Resamples the preference vector at geometrically distributed epochs.
class PreferenceSchedule {
 public:
  // mean_interval <= 0 keeps the initial vector forever.
  PreferenceSchedule(sim::Rng rng, double mean_interval);

  const PreferenceVector& current() const { return current_; }
  sim::Step next_change() const { return next_change_; }

  // Advances to `now`; returns true when the vector changed.
  bool Advance(sim::Step now);

  void Set(const PreferenceVector& w) { current_ = w; }

 private:
  sim::Rng rng_;
  double mean_interval_;
  PreferenceVector current_;
  sim::Step next_change_;
};

}  // namespace edgemarket::rewards

#endif  // EDGEMARKET_REWARDS_PREFERENCE_H_
