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

#include "edgemarket/rewards/preference.h"

#include <cmath>
#include <limits>

namespace edgemarket::rewards {

PreferenceVector PreferenceVector::FromDraws(double u1, double u2, double u3) {
  PreferenceVector w;
  w.utility = u1;
  w.utilization = 1.0 - u1;
  w.failure = u2;
  w.fairness = 1.0 - u2;
  w.loss_cost = u3;
  w.backoff_cost = 1.0 - u3;
  return w;
}

bool PreferenceVector::SatisfiesSimplex(double tol) const {
  auto in_unit = [](double x) { return x >= 0.0 && x <= 1.0; };
  for (double x : {utility, failure, utilization, fairness, loss_cost,
                   backoff_cost}) {
    if (!in_unit(x)) return false;
  }
  return std::abs(utility + utilization - 1.0) <= tol &&
         std::abs(failure + fairness - 1.0) <= tol &&
         std::abs(loss_cost + backoff_cost - 1.0) <= tol;
}

PreferenceVector SamplePreferences(sim::Rng& rng) {
  const double u1 = rng.Uniform();
  const double u2 = rng.Uniform();
  const double u3 = rng.Uniform();
  return PreferenceVector::FromDraws(u1, u2, u3);
}

PreferenceSchedule::PreferenceSchedule(sim::Rng rng, double mean_interval)
    : rng_(rng), mean_interval_(mean_interval) {
  current_ = SamplePreferences(rng_);
  next_change_ = mean_interval_ > 0.0 ? rng_.Geometric(mean_interval_)
                                      : std::numeric_limits<sim::Step>::max();
}

bool PreferenceSchedule::Advance(sim::Step now) {
  bool changed = false;
  while (now >= next_change_) {
    current_ = SamplePreferences(rng_);
    next_change_ += rng_.Geometric(mean_interval_);
    changed = true;
  }
  return changed;
}

}  // namespace edgemarket::rewards
