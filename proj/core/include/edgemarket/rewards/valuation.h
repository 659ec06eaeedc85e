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

#ifndef EDGEMARKET_REWARDS_VALUATION_H_
#define EDGEMARKET_REWARDS_VALUATION_H_

#include <span>
#include <vector>

#include "edgemarket/market/types.h"
#include "edgemarket/simcore/clock.h"
#include "edgemarket/simcore/rng.h"

namespace edgemarket::rewards {

struct ValuationConfig {
  // Per-unit valuation kappa drawn uniformly per bidder.
  double kappa_min = 0.005;
  double kappa_max = 0.0125;
  // Sensitivity multipliers on v and q.
  double valuation_scale = 1.0;
  double backoff_cost_scale = 1.0;
};

// v_{m,k} = kappa_m * resource_units_k, capped at the initial wealth.
std::vector<double> DrawValuations(std::span<const market::CommodityType> types,
                                   const ValuationConfig& config,
                                   double initial_wealth, sim::Rng& rng);

// c = v.
inline double LossCost(double valuation) { return valuation; }

// q = scale * v / max(steps to deadline, 1).
double BackoffCost(double valuation, sim::Step steps_to_deadline,
                   double scale = 1.0);

}  // namespace edgemarket::rewards

#endif  // EDGEMARKET_REWARDS_VALUATION_H_
