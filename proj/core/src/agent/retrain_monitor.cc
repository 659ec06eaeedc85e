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

#include "edgemarket/agent/retrain_monitor.h"

#include <numeric>

namespace edgemarket::agent {

bool RetrainMonitor::Check(double loss) {
  const bool trigger = history_.empty() || loss > Average();
  history_.push_back(loss);
  while (history_.size() > capacity_) history_.pop_front();
  return trigger;
}

double RetrainMonitor::Average() const {
  if (history_.empty()) return 0.0;
  return std::accumulate(history_.begin(), history_.end(), 0.0) /
         static_cast<double>(history_.size());
}

}  // namespace edgemarket::agent
