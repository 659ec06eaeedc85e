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

#ifndef EDGEMARKET_SIMCORE_EVENT_QUEUE_H_
#define EDGEMARKET_SIMCORE_EVENT_QUEUE_H_

#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "edgemarket/simcore/clock.h"

namespace edgemarket::sim {

using EventId = std::uint64_t;

// Min-queue ordered by (timestamp, insertion sequence). Events scheduled for
// the same step fire in the order they were inserted, so a run is fully
// determined by the sequence of Schedule() calls.
template <typename Payload>
class EventQueue {
 public:
  struct Event {
    Step at;
    EventId id;
    Payload payload;
  };

  explicit EventQueue(const SimClock& clock) : clock_(&clock) {}

  EventId Schedule(Payload payload, Step at) {
    if (at < clock_->now()) {
      throw CausalityError("event scheduled at " + std::to_string(at) +
                           " but clock is at " + std::to_string(clock_->now()));
    }
    const EventId id = next_id_++;
    heap_.push(Event{at, id, std::move(payload)});
    return id;
  }

  // Pops the next event whose timestamp is <= now, if any.
  std::optional<Event> PopDue() {
    if (heap_.empty() || heap_.top().at > clock_->now()) return std::nullopt;
    Event e = heap_.top();
    heap_.pop();
    return e;
  }

  std::optional<Step> NextTime() const {
    if (heap_.empty()) return std::nullopt;
    return heap_.top().at;
  }

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

 private:
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      if (a.at != b.at) return a.at > b.at;
      return a.id > b.id;
    }
  };

  const SimClock* clock_;
  EventId next_id_ = 0;
  std::priority_queue<Event, std::vector<Event>, Later> heap_;
};

}  // namespace edgemarket::sim

#endif  // EDGEMARKET_SIMCORE_EVENT_QUEUE_H_
