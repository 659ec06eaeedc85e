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

#ifndef EDGEMARKET_AGENT_RETRAIN_MONITOR_H_
#define EDGEMARKET_AGENT_RETRAIN_MONITOR_H_

#include <cstddef>
#include <deque>

namespace edgemarket::agent {

// Keeps the last `capacity` credit-prediction losses. A new loss triggers
// retraining when it exceeds the mean of the stored ones; with nothing stored
// it always triggers.
class RetrainMonitor {
 public:
  explicit RetrainMonitor(std::size_t capacity = 10, int shots = 1)
      : capacity_(capacity), shots_(shots) {}

  // Returns true when retraining should run; always records `loss`.
  bool Check(double loss);

  double Average() const;
  std::size_t size() const { return history_.size(); }
  int shots() const { return shots_; }

 private:
  std::size_t capacity_;
  int shots_;
  std::deque<double> history_;
};

}  // namespace edgemarket::agent

#endif  // EDGEMARKET_AGENT_RETRAIN_MONITOR_H_
