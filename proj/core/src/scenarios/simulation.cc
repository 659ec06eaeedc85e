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

#include "edgemarket/scenarios/simulation.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "edgemarket/market/auction.h"
#include "edgemarket/rewards/valuation.h"
#include "edgemarket/simcore/transmission.h"

namespace edgemarket::scenarios {
namespace {

constexpr double kCapacityTolerance = 1e-9;

std::vector<market::Seller> BuildSellers(const ScenarioConfig& c) {
  std::vector<market::Seller> sellers;
  for (std::size_t i = 0; i < c.sites.size(); ++i) {
    sellers.emplace_back(market::SellerConfig{
        .id = static_cast<market::SellerId>(i),
        .capacity = c.sites[i].capacity,
        .slot_rate = c.slot_rate,
        .link_delay = c.sites[i].link_delay,
        .base_price = c.sites[i].base_price});
  }
  return sellers;
}

int TotalFreeSlots(const std::vector<market::Seller>& sellers) {
  int n = 0;
  for (const auto& s : sellers) n += s.FreeSlots();
  return n;
}

double LoadVariance(const std::vector<market::Seller>& sellers) {
  double mean = 0.0;
  for (const auto& s : sellers) mean += s.utilization();
  mean /= static_cast<double>(sellers.size());
  double var = 0.0;
  for (const auto& s : sellers) {
    const double d = s.utilization() - mean;
    var += d * d;
  }
  return var / static_cast<double>(sellers.size());
}

}  // namespace

Simulation::Simulation(const ScenarioConfig& config, std::uint64_t seed,
                       std::vector<Participant> participants,
                       SimulationOptions options)
    : config_(config),
      options_(std::move(options)),
      streams_(seed),
      warmup_(static_cast<sim::Step>(
          std::llround(config.mobility_warmup_s * sim::kStepsPerSecond))),
      mobility_(config.mobility, streams_.Get(sim::Stream::kMobility)),
      sellers_(BuildSellers(config)),
      ties_(streams_.Get(sim::Stream::kAuctionTies)),
      work_rng_(streams_.Get(sim::Stream::kRequests, 0)),
      deliveries_(clock_),
      last_clearing_(config.types.size(), 0.0),
      payments_(static_cast<int>(participants.size()), config.window) {
  ValidateConfig(config_);
  if (participants.empty()) {
    throw ConfigError("simulation needs at least one bidder");
  }
  visible_.clearing_prices = last_clearing_;
  const std::size_t num_types = config_.types.size();
  for (std::size_t m = 0; m < participants.size(); ++m) {
    if (participants[m].bidder == nullptr) {
      throw std::invalid_argument("null bidder");
    }
    BidderState b{
        .participant = std::move(participants[m]),
        .algo = "",
        .preference = rewards::PreferenceSchedule(
            streams_.Get(sim::Stream::kPreferences, m),
            config_.preference_resample_mean),
        .request_rng = streams_.Get(sim::Stream::kRequests, m + 1)};
    b.algo = std::string(b.participant.bidder->algo());
    if (config_.fixed_preference) b.participant.constant_preference = true;
    if (b.participant.constant_preference) {
      b.preference = rewards::PreferenceSchedule(
          streams_.Get(sim::Stream::kPreferences, m), 0.0);
    }
    if (config_.fixed_preference) b.preference.Set(*config_.fixed_preference);
    b.valuations = rewards::DrawValuations(config_.types, config_.valuation,
                                           config_.initial_wealth,
                                           b.request_rng);
    b.next_request.assign(num_types, 0);
    b.account.initial_wealth = config_.initial_wealth;
    b.account.budget = config_.initial_wealth;
    b.participant.bidder->SetPreference(b.preference.current());
    bidders_.push_back(std::move(b));
  }
  if (!options_.audit_log_path.empty()) {
    audit_log_ = market::AuctionAuditLog(options_.audit_log_path);
  }
  if (!options_.trace_path.empty()) {
    trace_ = sim::EventTrace(options_.trace_path);
  }
  // Pre-roll the road so the first step already sees steady traffic.
  next_vehicle_ = mobility_.Next();
  SpawnVehicles(MobilityTime(0));
  BindBidders(MobilityTime(0));
}

Simulation::~Simulation() = default;

void Simulation::SpawnVehicles(sim::Step mobility_now) {
  while (next_vehicle_ && next_vehicle_->spawn() <= mobility_now) {
    vehicles_.push_back(std::move(*next_vehicle_));
    unbound_.push_back(vehicles_.size() - 1);
    next_vehicle_ = mobility_.Next();
  }
  std::erase_if(unbound_, [&](std::size_t v) {
    return !vehicles_[v].InCoverage(mobility_now);
  });
}

void Simulation::BindBidders(sim::Step mobility_now) {
  for (std::size_t m = 0; m < bidders_.size(); ++m) {
    BidderState& b = bidders_[m];
    if (b.vehicle || unbound_.empty()) continue;
    // Newest vehicle first: it has the most coverage time left.
    b.vehicle = unbound_.back();
    unbound_.pop_back();
    const sim::Step now = clock_.now();
    for (std::size_t k = 0; k < config_.types.size(); ++k) {
      const sim::Step period = config_.types[k].arrival_period;
      b.next_request[k] =
          now + static_cast<sim::Step>(b.request_rng.UniformInt(period));
    }
    if (trace_.enabled()) {
      trace_.Record(now, "bind",
                    std::to_string(m) + ":" +
                        std::to_string(vehicles_[*b.vehicle].id()));
    }
    (void)mobility_now;
  }
}

void Simulation::FinalLoss(int m, long LossBreakdown::*cause) {
  ++(losses_.*cause);
  ++bidders_[m].counters.final_losses;
  ++bidders_[m].account.failures;
  ++total_final_losses_;
}

void Simulation::Unbind(int m) {
  BidderState& b = bidders_[m];
  for (std::size_t j = 0; j < b.pipeline.size(); ++j) {
    FinalLoss(m, &LossBreakdown::flushed);
  }
  b.pipeline.clear();
  b.vehicle.reset();
  if (trace_.enabled()) trace_.Record(clock_.now(), "unbind", std::to_string(m));
}

double Simulation::DistanceOf(int m) const {
  const BidderState& b = bidders_[m];
  return vehicles_[*b.vehicle].DistanceAt(MobilityTime(clock_.now()));
}

int Simulation::vehicles_in_coverage() const {
  const sim::Step mt = MobilityTime(clock_.now());
  int n = 0;
  for (const auto& v : vehicles_) n += v.InCoverage(mt) ? 1 : 0;
  return n;
}

void Simulation::ArriveRequests() {
  const sim::Step now = clock_.now();
  for (std::size_t m = 0; m < bidders_.size(); ++m) {
    BidderState& b = bidders_[m];
    if (!b.vehicle) continue;
    for (std::size_t k = 0; k < config_.types.size(); ++k) {
      const market::CommodityType& type = config_.types[k];
      while (b.next_request[k] <= now) {
        agent::PipelineBid bid{.request = next_request_id_++,
                               .type = type.id,
                               .created = now,
                               .deadline = now + type.deadline_window,
                               .resource_units = type.resource_units,
                               .rebid_count = 0,
                               .valuation = b.valuations[k]};
        b.pipeline.push_back(bid);
        b.next_request[k] += type.arrival_period;
        if (trace_.enabled()) {
          trace_.Record(now, "request",
                        std::to_string(m) + ":" + std::to_string(bid.request));
        }
      }
    }
  }
}

void Simulation::ExpireRequests() {
  const sim::Step now = clock_.now();
  sim::Step min_link = sellers_.front().config().link_delay;
  for (const auto& s : sellers_) {
    min_link = std::min(min_link, s.config().link_delay);
  }
  for (std::size_t m = 0; m < bidders_.size(); ++m) {
    BidderState& b = bidders_[m];
    if (!b.vehicle || b.pipeline.empty()) continue;
    const double dist = DistanceOf(static_cast<int>(m));
    auto expired = [&](const agent::PipelineBid& bid) {
      const market::CommodityType& type = config_.types[bid.type];
      const auto up = sim::TransmissionDelay(type.uplink_mbit, dist,
                                             config_.radio);
      const auto down = sim::TransmissionDelay(type.downlink_mbit, dist,
                                               config_.radio);
      if (!up || !down) return true;
      const auto service = static_cast<sim::Step>(
          std::ceil(bid.resource_units / config_.slot_rate - 1e-9));
      const sim::Step earliest_finish = now + *up + min_link + service - 1;
      return earliest_finish > bid.deadline - *down - min_link;
    };
    const std::size_t before = b.pipeline.size();
    std::erase_if(b.pipeline, expired);
    for (std::size_t j = b.pipeline.size(); j < before; ++j) {
      FinalLoss(static_cast<int>(m), &LossBreakdown::expired);
    }
  }
}

void Simulation::Record(int bidder, const std::string& metric, double value) {
  if (!options_.record_metrics) return;
  rows_.push_back(MetricRow{
      .step = clock_.now(),
      .window = window_index_,
      .bidder = bidder,
      .algo = bidder == kSystemBidder ? "system" : bidders_[bidder].algo,
      .metric = metric,
      .value = value});
}

void Simulation::Step() {
  const sim::Step now = clock_.now();
  const sim::Step mt = MobilityTime(now);
  const int n = num_bidders();

  for (BidderState& b : bidders_) {
    if (!b.participant.constant_preference && b.preference.Advance(now)) {
      b.participant.bidder->SetPreference(b.preference.current());
    }
  }

  SpawnVehicles(mt);
  for (int m = 0; m < n; ++m) {
    BidderState& b = bidders_[m];
    if (b.vehicle && !vehicles_[*b.vehicle].InCoverage(mt)) Unbind(m);
  }
  BindBidders(mt);
  ArriveRequests();

  for (market::Seller& s : sellers_) {
    const market::ExecutionReport rep = s.ExecuteStep(now);
    for (const market::Job& j : rep.completed) {
      ++bidders_[j.bidder].counters.successes;
      ++total_successes_;
    }
    for (const market::Job& j : rep.dropped) {
      ++bidders_[j.bidder].counters.drops;
      FinalLoss(j.bidder, &LossBreakdown::dropped);
    }
  }
  ExpireRequests();

  while (auto ev = deliveries_.PopDue()) {
    ++audits_.observation_checks;
    if (ev->payload.broadcast.produced_at >= now) ++audits_.future_reads;
    visible_ = std::move(ev->payload.broadcast);
  }

  // Decisions.
  std::vector<PendingBid> bids;
  std::vector<std::vector<rewards::BidUtilityTerms>> terms(n);
  std::vector<bool> acted(n, false);
  for (int m = 0; m < n; ++m) {
    BidderState& b = bidders_[m];
    if (!b.vehicle || b.pipeline.empty()) continue;
    agent::Observation obs{.now = now,
                           .pipeline = b.pipeline,
                           .market = visible_,
                           .previous_wealth = b.account.budget,
                           .previous_reward = b.last_reward};
    ++audits_.observation_checks;
    if (obs.market.produced_at >= now) ++audits_.future_reads;
    const agent::Decision d = b.participant.bidder->Act(obs);
    if (d.actions.size() != b.pipeline.size() ||
        d.prices.size() != b.pipeline.size()) {
      throw std::logic_error("bidder returned a malformed decision");
    }
    acted[m] = true;
    ++b.window_decisions;
    double committed = 0.0;
    const double dist = DistanceOf(m);
    terms[m].resize(b.pipeline.size());
    for (std::size_t j = 0; j < b.pipeline.size(); ++j) {
      const agent::PipelineBid& pb = b.pipeline[j];
      rewards::BidUtilityTerms& t = terms[m][j];
      t.valuation = pb.valuation;
      t.loss_cost = rewards::LossCost(pb.valuation);
      t.backoff_cost = rewards::BackoffCost(
          pb.valuation, pb.deadline - now, config_.valuation.backoff_cost_scale);
      if (!d.actions[j].bid) continue;
      t.alpha = 1;
      committed += d.prices[j];
      const market::CommodityType& type = config_.types[pb.type];
      market::Bid bid{.request = pb.request,
                      .bidder = m,
                      .type = pb.type,
                      .price = d.prices[j],
                      .created = pb.created,
                      .deadline = pb.deadline,
                      .rebid_count = pb.rebid_count,
                      .uplink_delay = sim::TransmissionDelay(
                          type.uplink_mbit, dist, config_.radio).value_or(0),
                      .downlink_delay = sim::TransmissionDelay(
                          type.downlink_mbit, dist, config_.radio).value_or(0)};
      bids.push_back(PendingBid{m, j, bid});
      ++b.account.bids;
    }
    if (committed > b.account.budget + 1e-12) ++audits_.budget_violations;
  }

  // One auction per type, starting from a rotating type so no type always
  // gets first claim on free slots.
  std::vector<std::vector<bool>> remove(n);
  for (int m = 0; m < n; ++m) remove[m].assign(bidders_[m].pipeline.size(), false);
  const int num_types = static_cast<int>(config_.types.size());
  for (int i = 0; i < num_types; ++i) {
    const int k = static_cast<int>((now + i) % num_types);
    std::vector<market::Bid> type_bids;
    std::vector<const PendingBid*> origin;
    for (const PendingBid& pb : bids) {
      if (pb.bid.type != k) continue;
      type_bids.push_back(pb.bid);
      origin.push_back(&pb);
    }
    if (type_bids.empty()) continue;
    const market::TypeAuctionResult res =
        market::RunTypeAuction(type_bids, TotalFreeSlots(sellers_), ties_);
    last_clearing_[k] = res.clearing_price;
    int unplaced = 0;
    for (std::size_t w : res.winners) {
      const PendingBid& pb = *origin[w];
      BidderState& b = bidders_[pb.bidder];
      rewards::BidUtilityTerms& t = terms[pb.bidder][pb.slot];
      t.won = 1;
      t.payment = res.clearing_price;
      ++b.account.wins;
      b.window_payment += res.clearing_price;
      payments_.Record(now, pb.bidder, res.clearing_price);
      remove[pb.bidder][pb.slot] = true;
      const double work = config_.types[k].resource_units;
      const auto seller =
          market::AssignToSeller(pb.bid, work, sellers_, now);
      if (!seller) {
        ++unplaced;
        FinalLoss(pb.bidder, &LossBreakdown::unplaced);
        continue;
      }
      market::Seller& s = sellers_[*seller];
      s.Admit(market::Job{
          .request = pb.bid.request,
          .bidder = pb.bidder,
          .type = k,
          .nominal_work = work,
          .work = work * work_rng_.Uniform(1.0, 1.0 + config_.work_jitter),
          .done = 0.0,
          .admitted = now,
          .ready = now + pb.bid.uplink_delay + s.config().link_delay,
          .finish_by = pb.bid.deadline - pb.bid.downlink_delay -
                       s.config().link_delay});
    }
    for (std::size_t r : res.rejected) {
      const PendingBid& pb = *origin[r];
      BidderState& b = bidders_[pb.bidder];
      ++b.account.losses;
      if (market::HandleRebid(pb.bid, now, config_.max_rebids) ==
          market::RebidDecision::kRequeue) {
        ++b.pipeline[pb.slot].rebid_count;
      } else {
        remove[pb.bidder][pb.slot] = true;
        FinalLoss(pb.bidder, &LossBreakdown::rejected);
      }
    }
    if (audit_log_.enabled()) audit_log_.Record(now, res, type_bids, unplaced);
    if (trace_.enabled()) {
      trace_.Record(now, "auction",
                    config_.types[k].name + ":" +
                        std::to_string(res.winners.size()) + "/" +
                        std::to_string(type_bids.size()));
    }
  }

  for (const market::Seller& s : sellers_) {
    ++audits_.capacity_checks;
    if (s.InServiceUnits() > s.config().capacity + kCapacityTolerance) {
      ++audits_.capacity_violations;
    }
  }
  market::UpdateSellerPrices(sellers_);
  const double beta = market::UtilizationBeta(sellers_);

  for (int m = 0; m < n; ++m) {
    BidderState& b = bidders_[m];
    if (!acted[m]) continue;
    std::vector<agent::PipelineBid> kept;
    for (std::size_t j = 0; j < b.pipeline.size(); ++j) {
      if (!remove[m][j]) kept.push_back(b.pipeline[j]);
    }
    b.pipeline = std::move(kept);
    const rewards::PreferenceVector& w = b.preference.current();
    const double u = rewards::UtilityObjective(terms[m], w);
    b.window_utility += u;
    if (rewards::UpdateBudget(b.account, u)) {
      for (std::size_t j = 0; j < b.pipeline.size(); ++j) {
        FinalLoss(m, &LossBreakdown::flushed);
      }
      b.pipeline.clear();
    }
    const double r = rewards::ExtrinsicReward(
        rewards::ObjectiveSignals{.utility = u, .utilization = beta}, w);
    b.participant.bidder->Feedback(now, r);
    b.last_reward = r;
  }

  agent::MarketBroadcast cast{.produced_at = now,
                              .vehicle_count = vehicles_in_coverage(),
                              .utilization = beta,
                              .clearing_prices = last_clearing_};
  beta_sum_ += beta;
  load_var_sum_ += LoadVariance(sellers_);
  vehicles_sum_ += cast.vehicle_count;
  ++window_steps_;
  deliveries_.Schedule(Delivery{std::move(cast)},
                       now + 1 + config_.feedback_delay);

  if ((now + 1) % config_.window == 0) EndWindow();
  clock_.Tick();
}

void Simulation::EndWindow() {
  const sim::Step now = clock_.now();
  const int n = num_bidders();
  const double fairness = payments_.Fairness(now);
  WindowSummary summary;
  summary.end = now;
  summary.fairness = fairness;
  summary.beta = beta_sum_ / std::max<long>(window_steps_, 1);
  summary.load_variance = load_var_sum_ / std::max<long>(window_steps_, 1);
  for (int m = 0; m < n; ++m) {
    BidderState& b = bidders_[m];
    const rewards::FailureRate ofr =
        rewards::OffloadingFailureRate(b.counters, b.last_ofr);
    b.last_ofr = ofr.value;
    const double reward =
        rewards::LongTermReward(ofr.value, fairness, b.preference.current());
    b.participant.bidder->EndWindow(now, reward);
    const agent::BidderStats& stats = b.participant.bidder->stats();
    const long retrains = stats.retrain_shots - b.retrain_seen;
    b.retrain_seen = stats.retrain_shots;

    Record(m, "utility", b.window_utility);
    Record(m, "ofr", ofr.value);
    Record(m, "ofr_stale", ofr.stale ? 1.0 : 0.0);
    Record(m, "resolved", static_cast<double>(b.counters.resolved()));
    Record(m, "payment", b.window_payment);
    Record(m, "budget", b.account.budget);
    Record(m, "decisions", static_cast<double>(b.window_decisions));
    Record(m, "long_term_reward", reward);
    Record(m, "retrain", static_cast<double>(retrains));
    if (!stats.shots.empty() && stats.shots.back().step == now) {
      const agent::ShotRecord& shot = stats.shots.back();
      if (shot.credit_loss) Record(m, "credit_loss", *shot.credit_loss);
      if (shot.forward_loss) Record(m, "forward_loss", *shot.forward_loss);
      if (shot.inverse_loss) Record(m, "inverse_loss", *shot.inverse_loss);
    }
    summary.ofr.push_back(ofr.value);
    summary.utility.push_back(b.window_utility);

    b.counters = {};
    b.window_utility = 0.0;
    b.window_payment = 0.0;
    b.window_decisions = 0;
  }
  Record(kSystemBidder, "fairness", fairness);
  Record(kSystemBidder, "beta", summary.beta);
  Record(kSystemBidder, "load_variance", summary.load_variance);
  Record(kSystemBidder, "vehicle_count",
         vehicles_sum_ / std::max<long>(window_steps_, 1));
  windows_.push_back(std::move(summary));
  beta_sum_ = 0.0;
  load_var_sum_ = 0.0;
  vehicles_sum_ = 0.0;
  window_steps_ = 0;
  ++window_index_;
}

void Simulation::Run(sim::Step horizon) {
  while (clock_.now() < horizon) Step();
}

void Simulation::FinishMetrics() {
  Record(kSystemBidder, "capacity_violations",
         static_cast<double>(audits_.capacity_violations));
  Record(kSystemBidder, "future_reads",
         static_cast<double>(audits_.future_reads));
  Record(kSystemBidder, "budget_violations",
         static_cast<double>(audits_.budget_violations));
  Record(kSystemBidder, "loss_expired", static_cast<double>(losses_.expired));
  Record(kSystemBidder, "loss_rejected",
         static_cast<double>(losses_.rejected));
  Record(kSystemBidder, "loss_unplaced",
         static_cast<double>(losses_.unplaced));
  Record(kSystemBidder, "loss_dropped", static_cast<double>(losses_.dropped));
  Record(kSystemBidder, "loss_flushed", static_cast<double>(losses_.flushed));
}

}  // namespace edgemarket::scenarios
