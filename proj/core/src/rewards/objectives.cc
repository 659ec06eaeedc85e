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

#include "edgemarket/rewards/objectives.h"

#include <stdexcept>

namespace edgemarket::rewards {

double AuctionUtility(const BidUtilityTerms& t, const PreferenceVector& w) {
  const double a = t.alpha;
  const double z = t.won;
  const double payoff = a * z * (t.valuation - t.payment);
  const double losing = -a * (1.0 - z) * t.loss_cost;
  const double backoff = -(1.0 - a) * t.backoff_cost;
  return payoff + w.loss_cost * losing + w.backoff_cost * backoff;
}

double UtilityObjective(std::span<const BidUtilityTerms> bids,
                        const PreferenceVector& w) {
  double sum = 0.0;
  for (const auto& b : bids) sum += AuctionUtility(b, w);
  return sum;
}

double ExtrinsicReward(const ObjectiveSignals& s, const PreferenceVector& w) {
  double r = w.utility * s.utility + w.utilization * s.utilization;
  if (s.failure_rate) r += w.failure * -*s.failure_rate;
  if (s.fairness) r += w.fairness * *s.fairness;
  return r;
}

double LongTermReward(double failure_rate, double fairness,
                      const PreferenceVector& w) {
  return w.failure * -failure_rate + w.fairness * fairness;
}

double JainFairness(std::span<const double> totals) {
  if (totals.empty()) throw std::invalid_argument("JainFairness: no bidders");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double p : totals) {
    sum += p;
    sum_sq += p * p;
  }
  if (sum_sq == 0.0) return 1.0;
  return (sum * sum) / (static_cast<double>(totals.size()) * sum_sq);
}

PaymentWindow::PaymentWindow(int num_bidders, sim::Step window)
    : num_bidders_(num_bidders), window_(window) {
  if (num_bidders <= 0) throw std::invalid_argument("PaymentWindow: |M| < 1");
  if (window <= 0) throw std::invalid_argument("PaymentWindow: empty window");
}

void PaymentWindow::Record(sim::Step step, int bidder, double amount) {
  entries_.push_back({step, bidder, amount});
}

std::vector<double> PaymentWindow::Totals(sim::Step now) {
  while (!entries_.empty() && entries_.front().step <= now - window_) {
    entries_.pop_front();
  }
  std::vector<double> totals(static_cast<std::size_t>(num_bidders_), 0.0);
  for (const auto& e : entries_) totals[e.bidder] += e.amount;
  return totals;
}

double PaymentWindow::Fairness(sim::Step now) {
  const auto totals = Totals(now);
  return JainFairness(totals);
}

FailureRate OffloadingFailureRate(const RequestCounters& c, double previous) {
  if (c.resolved() == 0) return {previous, true};
  return {static_cast<double>(c.final_losses) /
              static_cast<double>(c.resolved()),
          false};
}

bool UpdateBudget(BidderAccount& account, double utility) {
  account.budget += utility;
  if (account.budget <= 0.0) {
    account.budget = account.initial_wealth;
    ++account.resets;
    return true;
  }
  return false;
}

}  // namespace edgemarket::rewards
