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

#include "edgemarket/agent/memory.h"

#include <algorithm>
#include <stdexcept>

namespace edgemarket::agent {

MemoryEntry& AgentMemory::Push(MemoryEntry e) {
  entries_.push_back(std::move(e));
  while (entries_.size() > capacity_) {
    entries_.pop_front();
    ++evicted_;
  }
  return entries_.back();
}

MemoryEntry* AgentMemory::Pending() {
  if (entries_.empty() || entries_.back().complete) return nullptr;
  return &entries_.back();
}

void AgentMemory::DropAllButPending() {
  const bool keep = !entries_.empty() && !entries_.back().complete;
  if (!keep) {
    entries_.clear();
    return;
  }
  MemoryEntry last = std::move(entries_.back());
  entries_.clear();
  entries_.push_back(std::move(last));
}

int SegmentOf(sim::Step step, sim::Step window_start, sim::Step window,
              int segments) {
  const sim::Step offset = std::clamp<sim::Step>(step - window_start, 0,
                                                 window - 1);
  return static_cast<int>(offset * segments / window);
}

std::vector<std::vector<double>> BuildSegments(
    std::span<MemoryEntry* const> entries, sim::Step window_start,
    sim::Step window, int segments, int state_dim, int action_classes,
    double w_failure, double w_fairness) {
  const int width = state_dim + action_classes + 4;
  std::vector<std::vector<double>> seq(segments,
                                       std::vector<double>(width, 0.0));
  std::vector<int> count(segments, 0);
  for (const MemoryEntry* e : entries) {
    const int s = SegmentOf(e->step, window_start, window, segments);
    auto& row = seq[s];
    for (int i = 0; i < state_dim; ++i) row[i] += e->state[i];
    row[state_dim + e->action_class] += 1.0;
    row[state_dim + action_classes] += e->extrinsic;
    ++count[s];
  }
  const double seg_len = static_cast<double>(window) / segments;
  for (int s = 0; s < segments; ++s) {
    auto& row = seq[s];
    if (count[s] > 0) {
      for (int i = 0; i < state_dim + action_classes + 1; ++i) {
        row[i] /= count[s];
      }
    }
    row[width - 3] = count[s] / seg_len;
    row[width - 2] = w_failure;
    row[width - 1] = w_fairness;
  }
  return seq;
}

std::vector<double> EntryWeights(std::span<MemoryEntry* const> entries,
                                 std::span<const double> attention,
                                 sim::Step window_start, sim::Step window) {
  const int segments = static_cast<int>(attention.size());
  std::vector<int> count(segments, 0);
  std::vector<int> seg(entries.size());
  for (std::size_t j = 0; j < entries.size(); ++j) {
    seg[j] = SegmentOf(entries[j]->step, window_start, window, segments);
    ++count[seg[j]];
  }
  double mass = 0.0;
  for (int s = 0; s < segments; ++s) {
    if (count[s] > 0) mass += attention[s];
  }
  std::vector<double> eps(entries.size(), 1.0);
  if (!(mass > 0.0)) return eps;
  const double n = static_cast<double>(entries.size());
  for (std::size_t j = 0; j < entries.size(); ++j) {
    eps[j] = n * attention[seg[j]] / (count[seg[j]] * mass);
  }
  return eps;
}

void RetroLabel(std::span<MemoryEntry* const> entries,
                std::span<const double> epsilon, double long_term_reward) {
  if (entries.size() != epsilon.size()) {
    throw std::invalid_argument("one weight per entry required");
  }
  if (entries.empty()) return;
  const double share = long_term_reward / static_cast<double>(entries.size());
  for (std::size_t j = 0; j < entries.size(); ++j) {
    MemoryEntry& e = *entries[j];
    e.extrinsic += share;
    e.epsilon = epsilon[j];
    e.labeled = true;
    if (e.complete) e.intrinsic = e.epsilon * e.extrinsic + e.forward_loss;
  }
}

}  // namespace edgemarket::agent
