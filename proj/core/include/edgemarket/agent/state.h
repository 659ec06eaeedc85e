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

#ifndef EDGEMARKET_AGENT_STATE_H_
#define EDGEMARKET_AGENT_STATE_H_

#include <deque>
#include <vector>

#include "edgemarket/agent/bidder.h"
#include "edgemarket/market/types.h"

namespace edgemarket::agent {

// Normalisation constants for the state vector.
struct StateConfig {
  std::vector<sim::Step> deadline_windows{100, 500};
  double pipeline_norm = 5.0;
  double resource_norm = 400.0;
  double vehicle_norm = 30.0;
  double initial_wealth = 10.0;
  double payment_norm = 1.0;

  static StateConfig ForTypes(const std::vector<market::CommodityType>& types,
                              double initial_wealth);
  int num_types() const { return static_cast<int>(deadline_windows.size()); }
};

// Per type: pipeline count, minimum time-to-deadline; then total resource
// amount, bidder count, utilization, previous wealth; previous payment per
// type; previous extrinsic reward.
std::vector<double> BuildState(const Observation& obs, const StateConfig& cfg);

// Type one-hot, time-to-deadline, resource amount, rebid flag.
std::vector<double> BidFeatures(const PipelineBid& bid, sim::Step now,
                                const StateConfig& cfg);

// Index of the bid with the least time to its deadline (first on ties).
std::size_t MostUrgent(const std::vector<PipelineBid>& pipeline);

// Last `depth` states, newest first, zero-padded while fewer exist.
class FrameStack {
 public:
  FrameStack(int depth, int dim) : depth_(depth), dim_(dim) {}

  void Push(std::vector<double> state);
  std::vector<double> Stacked() const;
  void Clear() { frames_.clear(); }
  int size() const { return static_cast<int>(frames_.size()); }

 private:
  int depth_;
  int dim_;
  std::deque<std::vector<double>> frames_;
};

}  // namespace edgemarket::agent

#endif  // EDGEMARKET_AGENT_STATE_H_
