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

#ifndef EDGEMARKET_AGENT_BIDDER_H_
#define EDGEMARKET_AGENT_BIDDER_H_

#include <optional>
#include <string_view>
#include <vector>

#include "edgemarket/market/types.h"
#include "edgemarket/nn/policy.h"
#include "edgemarket/rewards/preference.h"
#include "edgemarket/simcore/clock.h"

namespace edgemarket::agent {

// One request waiting in a bidder's pipeline. `valuation` is the bidder's
// own private value for the request type.
struct PipelineBid {
  market::RequestId request = 0;
  market::TypeId type = 0;
  sim::Step created = 0;
  sim::Step deadline = 0;
  int resource_units = 0;
  int rebid_count = 0;
  double valuation = 0.0;
};

// Auctioneer broadcast as received by the bidder. Carries the step it was
// produced at so delayed delivery can be audited.
struct MarketBroadcast {
  sim::Step produced_at = -1;
  int vehicle_count = 0;
  double utilization = 0.0;
  std::vector<double> clearing_prices;  // per type, last auction
};

// Everything a bidder may read when deciding.
struct Observation {
  sim::Step now = 0;
  std::vector<PipelineBid> pipeline;
  MarketBroadcast market;
  double previous_wealth = 0.0;
  double previous_reward = 0.0;
};

// One entry per pipeline bid, in pipeline order.
struct Decision {
  std::vector<nn::BidAction> actions;
  std::vector<double> prices;  // 0 when backing off
};

// Per-window training record.
struct ShotRecord {
  sim::Step step = 0;
  int shot = 0;
  long decisions = 0;
  double rl_reward = 0.0;
  std::optional<double> credit_loss;
  std::optional<double> forward_loss;
  std::optional<double> inverse_loss;
  bool trained = false;
};

struct BidderStats {
  long decisions = 0;
  long best_response_decisions = 0;
  long windows = 0;
  long retrain_shots = 0;
  long skipped_updates = 0;
  std::vector<ShotRecord> shots;
};

// Hooks shared by every bidder kind.
class Bidder {
 public:
  virtual ~Bidder() = default;

  virtual std::string_view algo() const = 0;
  virtual void SetPreference(const rewards::PreferenceVector& w) = 0;

  // Called on steps where the pipeline is non-empty.
  virtual Decision Act(const Observation& obs) = 0;

  // Short-term extrinsic reward for the decision made this step.
  virtual void Feedback(sim::Step now, double extrinsic_reward) = 0;

  // Long-term reward for the accounting window that ends at `now`.
  virtual void EndWindow(sim::Step now, double long_term_reward) = 0;

  virtual const BidderStats& stats() const = 0;
};

// Price for a grid level: level / (levels - 1) * valuation.
double GridPrice(int level, int levels, double valuation);

// Turns sampled actions into prices, backing off any bid whose price would
// push the running total over `budget`.
Decision ApplyBudgetMask(std::vector<nn::BidAction> actions,
                         const std::vector<PipelineBid>& pipeline,
                         int levels, double budget);

}  // namespace edgemarket::agent

#endif  // EDGEMARKET_AGENT_BIDDER_H_
