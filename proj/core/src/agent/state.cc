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

#include "edgemarket/agent/state.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace edgemarket::agent {

StateConfig StateConfig::ForTypes(
    const std::vector<market::CommodityType>& types, double initial_wealth) {
  StateConfig cfg;
  cfg.deadline_windows.clear();
  int max_units = 1;
  for (const auto& t : types) {
    cfg.deadline_windows.push_back(t.deadline_window);
    max_units = std::max(max_units, t.resource_units);
  }
  cfg.resource_norm = cfg.pipeline_norm * max_units;
  cfg.initial_wealth = initial_wealth;
  return cfg;
}

std::vector<double> BuildState(const Observation& obs, const StateConfig& cfg) {
  const int k = cfg.num_types();
  std::vector<double> s(3 * k + 5, 0.0);
  std::vector<double> min_ttd(k, 1.0);
  double resource = 0.0;
  for (const PipelineBid& b : obs.pipeline) {
    if (b.type < 0 || b.type >= k) throw std::out_of_range("unknown type");
    s[2 * b.type] += 1.0 / cfg.pipeline_norm;
    const double ttd = static_cast<double>(b.deadline - obs.now) /
                       static_cast<double>(cfg.deadline_windows[b.type]);
    min_ttd[b.type] = std::min(min_ttd[b.type], std::max(0.0, ttd));
    resource += b.resource_units;
  }
  for (int t = 0; t < k; ++t) s[2 * t + 1] = min_ttd[t];
  int i = 2 * k;
  s[i++] = resource / cfg.resource_norm;
  s[i++] = obs.market.vehicle_count / cfg.vehicle_norm;
  s[i++] = obs.market.utilization;
  // Wealth is unbounded above; squash it so 0.5 means the initial wealth.
  const double wealth = std::max(0.0, obs.previous_wealth);
  s[i++] = wealth / (wealth + cfg.initial_wealth);
  for (int t = 0; t < k; ++t) {
    const double p = t < static_cast<int>(obs.market.clearing_prices.size())
                         ? obs.market.clearing_prices[t]
                         : 0.0;
    s[i++] = p / cfg.payment_norm;
  }
  s[i++] = obs.previous_reward;
  return s;
}

std::vector<double> BidFeatures(const PipelineBid& bid, sim::Step now,
                                const StateConfig& cfg) {
  const int k = cfg.num_types();
  std::vector<double> f(k + 3, 0.0);
  f[bid.type] = 1.0;
  f[k] = std::max(0.0, static_cast<double>(bid.deadline - now) /
                           static_cast<double>(cfg.deadline_windows[bid.type]));
  f[k + 1] = bid.resource_units * cfg.pipeline_norm / cfg.resource_norm;
  f[k + 2] = bid.rebid_count > 0 ? 1.0 : 0.0;
  return f;
}

std::size_t MostUrgent(const std::vector<PipelineBid>& pipeline) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < pipeline.size(); ++j) {
    if (pipeline[j].deadline < pipeline[best].deadline) best = j;
  }
  return best;
}

void FrameStack::Push(std::vector<double> state) {
  if (static_cast<int>(state.size()) != dim_) {
    throw std::invalid_argument("state dimension mismatch");
  }
  frames_.push_front(std::move(state));
  while (static_cast<int>(frames_.size()) > depth_) frames_.pop_back();
}

std::vector<double> FrameStack::Stacked() const {
  std::vector<double> out(static_cast<std::size_t>(depth_) * dim_, 0.0);
  for (std::size_t f = 0; f < frames_.size(); ++f) {
    std::copy(frames_[f].begin(), frames_[f].end(), out.begin() + f * dim_);
  }
  return out;
}

}  // namespace edgemarket::agent
