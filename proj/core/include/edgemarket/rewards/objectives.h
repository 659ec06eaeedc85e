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

#ifndef EDGEMARKET_REWARDS_OBJECTIVES_H_
#define EDGEMARKET_REWARDS_OBJECTIVES_H_

#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "edgemarket/rewards/preference.h"
#include "edgemarket/simcore/clock.h"

namespace edgemarket::rewards {

// Terms of the per-bid auction utility.
struct BidUtilityTerms {
  int alpha = 0;             // 1 = bid, 0 = back off
  int won = 0;               // auction outcome z
  double valuation = 0.0;    // v
  double payment = 0.0;      // clearing price b*
  double loss_cost = 0.0;    // c
  double backoff_cost = 0.0; // q
};

// u = a*z*(v - b*) - W12*a*(1-z)*c - W13*(1-a)*q
double AuctionUtility(const BidUtilityTerms& t, const PreferenceVector& w);

// Sum of per-bid utilities over the bidder's active pipeline.
double UtilityObjective(std::span<const BidUtilityTerms> bids,
                        const PreferenceVector& w);

struct ObjectiveSignals {
  double utility = 0.0;                 // r^{o1}
  double utilization = 0.0;             // beta
  std::optional<double> failure_rate;   // OFR, only at window boundaries
  std::optional<double> fairness;       // only at window boundaries
};

// Scalarized extrinsic reward. OFR enters negated so every term is
// maximized; absent long-term terms contribute zero.
double ExtrinsicReward(const ObjectiveSignals& s, const PreferenceVector& w);

// Long-term part only: W2 * (-OFR) + W4 * fairness.
double LongTermReward(double failure_rate, double fairness,
                      const PreferenceVector& w);

// (sum P)^2 / (|M| sum P^2); defined as 1 when every total is zero.
double JainFairness(std::span<const double> totals);

// Per-bidder payment totals over a sliding window of steps.
class PaymentWindow {
 public:
  PaymentWindow(int num_bidders, sim::Step window);

  void Record(sim::Step step, int bidder, double amount);
  // Drops entries older than (now - window).
  std::vector<double> Totals(sim::Step now);
  double Fairness(sim::Step now);

  int num_bidders() const { return num_bidders_; }

 private:
  struct Entry {
    sim::Step step;
    int bidder;
    double amount;
  };
  int num_bidders_;
  sim::Step window_;
  std::deque<Entry> entries_;
};

// Resolved-request counters for one bidder over one accounting window.
struct RequestCounters {
  long successes = 0;     // won and executed (or pending execution)
  long final_losses = 0;  // deadline expiries + post-rebid rejections
  long drops = 0;         // admitted but dropped by a seller

  long resolved() const { return successes + final_losses; }
};

struct FailureRate {
  double value = 0.0;
  bool stale = false;  // no resolved requests; value carried over
};

// OFR = final losses / resolved. With nothing resolved the previous value is
// returned and flagged stale.
FailureRate OffloadingFailureRate(const RequestCounters& c, double previous);

// Budget bookkeeping for one bidder.
struct BidderAccount {
  double initial_wealth = 10.0;
  double budget = 10.0;
  long resets = 0;
  long bids = 0;
  long wins = 0;
  long losses = 0;
  long failures = 0;
};

// B <- B + u; returns true when the budget fell to <= 0 and was reset to the
// initial wealth. The caller flushes the pipeline as losses on reset.
bool UpdateBudget(BidderAccount& account, double utility);

}  // namespace edgemarket::rewards

#endif  // EDGEMARKET_REWARDS_OBJECTIVES_H_
