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

#include "edgemarket/market/seller.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>

namespace edgemarket::market {

Seller::Seller(SellerConfig config) : config_(config) {
  if (!(config_.capacity >= 0.0) || !(config_.slot_rate > 0.0)) {
    throw std::invalid_argument("seller capacity/slot_rate invalid");
  }
  slots_ = static_cast<int>(std::floor(config_.capacity / config_.slot_rate +
                                       1e-9));
}

int Seller::FreeSlots() const {
  return std::max(0, slots_ - OccupiedSlots() -
                         static_cast<int>(waiting_.size()));
}

sim::Step Seller::EstimateFinish(sim::Step now, sim::Step ready_delay,
                                 double nominal_work) const {
  if (slots_ == 0) return std::numeric_limits<sim::Step>::max();
  const double rate = config_.slot_rate;
  auto steps_for = [rate](double work) {
    return static_cast<sim::Step>(std::ceil(work / rate - 1e-9));
  };
  // Min-heap of the step at which each slot becomes free.
  std::priority_queue<sim::Step, std::vector<sim::Step>, std::greater<>> free;
  for (const Job& j : running_) {
    const double left = std::max(0.0, j.nominal_work - j.done);
    free.push(std::max(now, j.ready) + steps_for(left));
  }
  for (int i = OccupiedSlots(); i < slots_; ++i) free.push(now);
  for (const Job& j : waiting_) {
    const sim::Step start = std::max(free.top(), j.ready);
    free.pop();
    free.push(start + steps_for(j.nominal_work));
  }
  const sim::Step start = std::max(free.top(), now + ready_delay);
  // Finishing on step s means s - start + 1 steps of service.
  return start + steps_for(nominal_work) - 1;
}

void Seller::Admit(Job job) {
  waiting_.push_back(std::move(job));
  FillSlots();
}

void Seller::FillSlots() {
  while (!waiting_.empty() && OccupiedSlots() < slots_) {
    running_.push_back(std::move(waiting_.front()));
    waiting_.pop_front();
  }
  peak_in_service_ = std::max(peak_in_service_, InServiceUnits());
}

ExecutionReport Seller::ExecuteStep(sim::Step now) {
  ExecutionReport report;
  std::vector<Job> still;
  still.reserve(running_.size());
  for (Job& j : running_) {
    if (now >= j.ready) j.done += config_.slot_rate;
    if (j.done + 1e-9 >= j.work) {
      report.completed.push_back(std::move(j));
    } else if (now >= j.finish_by) {
      report.dropped.push_back(std::move(j));
    } else {
      still.push_back(std::move(j));
    }
  }
  running_ = std::move(still);
  // Queued jobs that can no longer make their deadline are dropped too.
  for (auto it = waiting_.begin(); it != waiting_.end();) {
    if (now >= it->finish_by) {
      report.dropped.push_back(std::move(*it));
      it = waiting_.erase(it);
    } else {
      ++it;
    }
  }
  FillSlots();
  return report;
}

double Seller::InServiceUnits() const {
  return static_cast<double>(OccupiedSlots()) * config_.slot_rate;
}

double Seller::utilization() const {
  if (config_.capacity <= 0.0) return 1.0;
  return std::min(1.0, InServiceUnits() / config_.capacity);
}

void Seller::UpdatePrice() { price_ = config_.base_price * utilization(); }

std::optional<SellerId> AssignToSeller(const Bid& bid, double nominal_work,
                                       std::span<const Seller> sellers,
                                       sim::Step now) {
  std::optional<SellerId> best;
  double best_price = 0.0;
  for (const Seller& s : sellers) {
    const sim::Step ready_delay =
        bid.uplink_delay + s.config().link_delay;
    const sim::Step finish = s.EstimateFinish(now, ready_delay, nominal_work);
    const sim::Step finish_by =
        bid.deadline - bid.downlink_delay - s.config().link_delay;
    if (finish > finish_by) continue;
    if (!best || s.price() < best_price ||
        (s.price() == best_price && s.id() < *best)) {
      best = s.id();
      best_price = s.price();
    }
  }
  return best;
}

void UpdateSellerPrices(std::span<Seller> sellers) {
  for (Seller& s : sellers) s.UpdatePrice();
}

double UtilizationBeta(std::span<const Seller> sellers) {
  double used = 0.0;
  double total = 0.0;
  for (const Seller& s : sellers) {
    used += s.InServiceUnits();
    total += s.config().capacity;
  }
  return total > 0.0 ? std::min(1.0, used / total) : 0.0;
}

}  // namespace edgemarket::market
