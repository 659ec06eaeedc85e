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

#include "edgemarket/rewards/valuation.h"

#include <algorithm>

namespace edgemarket::rewards {

std::vector<double> DrawValuations(std::span<const market::CommodityType> types,
                                   const ValuationConfig& config,
                                   double initial_wealth, sim::Rng& rng) {
  const double kappa = rng.Uniform(config.kappa_min, config.kappa_max);
  std::vector<double> v;
  v.reserve(types.size());
  for (const auto& t : types) {
    v.push_back(std::min(initial_wealth, config.valuation_scale * kappa *
                                             t.resource_units));
  }
  return v;
}

double BackoffCost(double valuation, sim::Step steps_to_deadline,
                   double scale) {
  return scale * valuation /
         static_cast<double>(std::max<sim::Step>(steps_to_deadline, 1));
}

}  // namespace edgemarket::rewards
