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

#ifndef EDGEMARKET_SIMCORE_CLOCK_H_
#define EDGEMARKET_SIMCORE_CLOCK_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace edgemarket::sim {

// One step is one millisecond of simulated time.
using Step = std::int64_t;

inline constexpr Step kStepsPerSecond = 1000;

// Raised when an event would be scheduled in the past or the clock would
// move backwards. Either indicates a bug in the caller.
class CausalityError : public std::logic_error {
 public:
  explicit CausalityError(const std::string& what) : std::logic_error(what) {}
};

class SimClock {
 public:
  Step now() const { return now_; }

  void AdvanceTo(Step t) {
    if (t < now_) {
      throw CausalityError("clock cannot move from " + std::to_string(now_) +
                           " back to " + std::to_string(t));
    }
    now_ = t;
  }

  void Tick() { ++now_; }

 private:
  Step now_ = 0;
};

}  // namespace edgemarket::sim

#endif  // EDGEMARKET_SIMCORE_CLOCK_H_
