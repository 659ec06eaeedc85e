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

#include "edgemarket/agent/bidder.h"

#include <stdexcept>

namespace edgemarket::agent {

double GridPrice(int level, int levels, double valuation) {
  if (levels < 2) return valuation;
  return valuation * static_cast<double>(level) / (levels - 1);
}

Decision ApplyBudgetMask(std::vector<nn::BidAction> actions,
                         const std::vector<PipelineBid>& pipeline, int levels,
                         double budget) {
  if (actions.size() != pipeline.size()) {
    throw std::invalid_argument("one action per pipeline bid required");
  }
  Decision d;
  d.prices.assign(actions.size(), 0.0);
  double spent = 0.0;
  for (std::size_t j = 0; j < actions.size(); ++j) {
    if (!actions[j].bid) continue;
    const double price = GridPrice(actions[j].level, levels,
                                   pipeline[j].valuation);
    if (budget <= 0.0 || spent + price > budget) {
      actions[j] = nn::BidAction{};
      continue;
    }
    spent += price;
    d.prices[j] = price;
  }
  d.actions = std::move(actions);
  return d;
}

}  // namespace edgemarket::agent
