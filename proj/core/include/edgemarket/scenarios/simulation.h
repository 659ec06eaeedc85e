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

#ifndef EDGEMARKET_SCENARIOS_SIMULATION_H_
#define EDGEMARKET_SCENARIOS_SIMULATION_H_

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "edgemarket/agent/bidder.h"
#include "edgemarket/market/audit_log.h"
#include "edgemarket/market/seller.h"
#include "edgemarket/rewards/objectives.h"
#include "edgemarket/rewards/preference.h"
#include "edgemarket/scenarios/config.h"
#include "edgemarket/scenarios/metrics.h"
#include "edgemarket/simcore/clock.h"
#include "edgemarket/simcore/event_queue.h"
#include "edgemarket/simcore/mobility.h"
#include "edgemarket/simcore/rng.h"
#include "edgemarket/simcore/trace.h"

namespace edgemarket::scenarios {

// A bidder plugged into the market.
struct Participant {
  std::unique_ptr<agent::Bidder> bidder;
  // Keeps the first sampled preference vector for the whole run.
  bool constant_preference = false;
};

struct SimulationOptions {
  std::string audit_log_path;  // per-auction CSV, empty = off
  std::string trace_path;      // event trace, empty = off
  bool record_metrics = true;
};

// Invariant checks evaluated while the market runs.
struct AuditCounters {
  long capacity_violations = 0;
  long future_reads = 0;
  long budget_violations = 0;
  long capacity_checks = 0;
  long observation_checks = 0;

  bool clean() const {
    return capacity_violations == 0 && future_reads == 0 &&
           budget_violations == 0;
  }
};

// Final losses by cause, over the whole run.
struct LossBreakdown {
  long expired = 0;    // could no longer meet the deadline in the pipeline
  long rejected = 0;   // lost the auction with no rebid left
  long unplaced = 0;   // won but no seller could meet the deadline
  long dropped = 0;    // admitted but missed the deadline at the seller
  long flushed = 0;    // left coverage or budget reset
};

// Per-window values kept in memory for callers that do not want to parse
// the CSV.
struct WindowSummary {
  sim::Step end = 0;
  std::vector<double> ofr;      // per bidder
  std::vector<double> utility;  // per bidder, summed over the window
  double fairness = 1.0;
  double beta = 0.0;
  double load_variance = 0.0;
};

class Simulation {
 public:
  Simulation(const ScenarioConfig& config, std::uint64_t seed,
             std::vector<Participant> participants,
             SimulationOptions options = {});
  ~Simulation();

  // Advances one step.
  void Step();
  // Steps until `now() == horizon`.
  void Run(sim::Step horizon);

  sim::Step now() const { return clock_.now(); }
  int num_bidders() const { return static_cast<int>(bidders_.size()); }
  agent::Bidder& bidder(int m) { return *bidders_[m].participant.bidder; }
  const rewards::BidderAccount& account(int m) const {
    return bidders_[m].account;
  }
  const rewards::PreferenceVector& preference(int m) const {
    return bidders_[m].preference.current();
  }
  const std::vector<market::Seller>& sellers() const { return sellers_; }
  const AuditCounters& audits() const { return audits_; }
  const std::vector<MetricRow>& metrics() const { return rows_; }
  const std::vector<WindowSummary>& windows() const { return windows_; }
  int vehicles_in_coverage() const;
  // Requests created so far, by resolution.
  long total_successes() const { return total_successes_; }
  long total_final_losses() const { return total_final_losses_; }
  const LossBreakdown& losses() const { return losses_; }

  // Appends the audit totals as system rows.
  void FinishMetrics();

 private:
  struct BidderState {
    Participant participant;
    std::string algo;
    rewards::PreferenceSchedule preference;
    std::vector<double> valuations;
    std::optional<std::size_t> vehicle;  // index into vehicles_
    std::vector<sim::Step> next_request;  // per type
    std::vector<agent::PipelineBid> pipeline;
    rewards::BidderAccount account;
    rewards::RequestCounters counters;
    double last_ofr = 0.0;
    double last_reward = 0.0;
    double window_utility = 0.0;
    double window_payment = 0.0;
    long window_decisions = 0;
    long retrain_seen = 0;
    sim::Rng request_rng;
  };

  struct PendingBid {
    int bidder;
    std::size_t slot;  // index into that bidder's pipeline
    market::Bid bid;
  };

  sim::Step MobilityTime(sim::Step step) const { return step + warmup_; }
  void SpawnVehicles(sim::Step mobility_now);
  void BindBidders(sim::Step mobility_now);
  void Unbind(int m);
  void ArriveRequests();
  void ExpireRequests();
  void FinalLoss(int m, long LossBreakdown::*cause);
  void EndWindow();
  void Record(int bidder, const std::string& metric, double value);
  double DistanceOf(int m) const;

  ScenarioConfig config_;
  SimulationOptions options_;
  sim::RngStreams streams_;
  sim::SimClock clock_;
  sim::Step warmup_;

  sim::MobilityModel mobility_;
  std::optional<sim::VehicleTrack> next_vehicle_;
  std::vector<sim::VehicleTrack> vehicles_;
  std::deque<std::size_t> unbound_;  // vehicles in coverage without a bidder

  std::vector<BidderState> bidders_;
  std::vector<market::Seller> sellers_;
  sim::Rng ties_;
  sim::Rng work_rng_;
  market::RequestId next_request_id_ = 0;

  struct Delivery {
    agent::MarketBroadcast broadcast;
  };
  sim::EventQueue<Delivery> deliveries_;
  agent::MarketBroadcast visible_;
  std::vector<double> last_clearing_;

  rewards::PaymentWindow payments_;
  double beta_sum_ = 0.0;
  double load_var_sum_ = 0.0;
  double vehicles_sum_ = 0.0;
  long window_steps_ = 0;
  long window_index_ = 0;

  AuditCounters audits_;
  std::vector<MetricRow> rows_;
  std::vector<WindowSummary> windows_;
  long total_successes_ = 0;
  long total_final_losses_ = 0;
  LossBreakdown losses_;

  market::AuctionAuditLog audit_log_;
  sim::EventTrace trace_;
};

}  // namespace edgemarket::scenarios

#endif  // EDGEMARKET_SCENARIOS_SIMULATION_H_
