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

#ifndef EDGEMARKET_MARKET_SELLER_H_
#define EDGEMARKET_MARKET_SELLER_H_

#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "edgemarket/market/types.h"
#include "edgemarket/simcore/clock.h"

namespace edgemarket::market {

struct SellerConfig {
  SellerId id = 0;
  // Resource units per step.
  double capacity = 10.0;
  // Each admitted job is served at this rate in its own slot, so the seller
  // runs floor(capacity / slot_rate) jobs in parallel.
  double slot_rate = 10.0;
  // Extra one-way delay to reach the site (remote sites).
  sim::Step link_delay = 0;
  double base_price = 1.0;
};

struct Job {
  RequestId request = 0;
  BidderId bidder = 0;
  TypeId type = 0;
  double nominal_work = 0.0;
  // Actual work after processing-time jitter; unknown to the estimator.
  double work = 0.0;
  double done = 0.0;
  sim::Step admitted = 0;
  sim::Step ready = 0;           // processing cannot start before this step
  sim::Step finish_by = 0;       // last step on which processing may finish
};

struct ExecutionReport {
  std::vector<Job> completed;
  std::vector<Job> dropped;
};

class Seller {
 public:
  explicit Seller(SellerConfig config);

  SellerId id() const { return config_.id; }
  const SellerConfig& config() const { return config_; }

  int slots() const { return slots_; }
  int OccupiedSlots() const { return static_cast<int>(running_.size()); }
  int FreeSlots() const;
  std::size_t QueueLength() const { return waiting_.size(); }

  // Estimated step on which a job of `nominal_work` admitted now would finish
  // processing, given it cannot start before `now + ready_delay`.
  sim::Step EstimateFinish(sim::Step now, sim::Step ready_delay,
                           double nominal_work) const;

  void Admit(Job job);

  // Serves one step of every running job. Jobs that finish are reported
  // completed; jobs that reach `finish_by` unfinished are dropped.
  ExecutionReport ExecuteStep(sim::Step now);

  // Resource units committed to jobs holding a slot.
  double InServiceUnits() const;
  double utilization() const;

  double price() const { return price_; }
  // price = base_price * utilization.
  void UpdatePrice();

  // Highest in-service total seen so far, for the capacity-safety audit.
  double peak_in_service() const { return peak_in_service_; }

 private:
  void FillSlots();

  SellerConfig config_;
  int slots_;
  std::vector<Job> running_;
  std::deque<Job> waiting_;
  double price_ = 0.0;
  double peak_in_service_ = 0.0;
};

// Cheapest seller (lowest id on ties) that can finish the request before its
// deadline; nullopt when none can.
std::optional<SellerId> AssignToSeller(const Bid& bid, double nominal_work,
                                       std::span<const Seller> sellers,
                                       sim::Step now);

void UpdateSellerPrices(std::span<Seller> sellers);

// Fraction of total capacity committed across sellers.
double UtilizationBeta(std::span<const Seller> sellers);

}  // namespace edgemarket::market

#endif  // EDGEMARKET_MARKET_SELLER_H_
