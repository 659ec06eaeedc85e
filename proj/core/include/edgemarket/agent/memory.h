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

#ifndef EDGEMARKET_AGENT_MEMORY_H_
#define EDGEMARKET_AGENT_MEMORY_H_

#include <deque>
#include <span>
#include <vector>

#include "edgemarket/nn/policy.h"
#include "edgemarket/simcore/clock.h"

namespace edgemarket::agent {

// One decision epoch. The transition is complete once the next decision's
// state is known.
struct MemoryEntry {
  sim::Step step = 0;
  std::vector<double> state;    // raw state at the decision
  std::vector<double> stacked;  // network input
  std::vector<std::vector<double>> bid_features;
  std::vector<nn::BidAction> actions;
  int action_class = 0;
  bool best_response = false;

  double extrinsic = 0.0;  // r_e, plus the long-term share once labelled
  double epsilon = 1.0;
  double forward_loss = 0.0;
  double inverse_loss = 0.0;
  double intrinsic = 0.0;  // r_i = epsilon * r_e + L_f

  bool complete = false;
  bool labeled = false;
  std::vector<double> next_state;
  std::vector<double> next_stacked;
};

// Bounded FIFO of decision epochs. Oldest entries are evicted first.
class AgentMemory {
 public:
  explicit AgentMemory(std::size_t capacity) : capacity_(capacity) {}

  MemoryEntry& Push(MemoryEntry e);
  MemoryEntry* Pending();  // last entry if still incomplete
  std::deque<MemoryEntry>& entries() { return entries_; }
  const std::deque<MemoryEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t evicted() const { return evicted_; }

  // Removes every entry except an incomplete last one.
  void DropAllButPending();

 private:
  std::size_t capacity_;
  std::size_t evicted_ = 0;
  std::deque<MemoryEntry> entries_;
};

// Segment summaries of one credit window for the recurrent module. Each row
// is [mean state, mean action one-hot, mean r_e, count / segment length,
// w_failure, w_fairness]. Empty segments carry only the two weights.
std::vector<std::vector<double>> BuildSegments(
    std::span<MemoryEntry* const> entries, sim::Step window_start,
    sim::Step window, int segments, int state_dim, int action_classes,
    double w_failure, double w_fairness);

int SegmentOf(sim::Step step, sim::Step window_start, sim::Step window,
              int segments);

// Per-entry credit weights from segment attention. An entry's weight is its
// segment's attention split evenly among the segment's entries, renormalised
// over non-empty segments and scaled so the weights average 1.
std::vector<double> EntryWeights(std::span<MemoryEntry* const> entries,
                                 std::span<const double> attention,
                                 sim::Step window_start, sim::Step window);

// Adds long_term / n to every entry's r_e, stores epsilon and, for complete
// entries, r_i = epsilon * r_e + L_f.
void RetroLabel(std::span<MemoryEntry* const> entries,
                std::span<const double> epsilon, double long_term_reward);

}  // namespace edgemarket::agent

#endif  // EDGEMARKET_AGENT_MEMORY_H_
