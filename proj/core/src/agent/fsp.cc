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

#include "edgemarket/agent/fsp.h"

#include <cmath>

namespace edgemarket::agent {

double FspSchedule::Eta(sim::Step t) const {
  if (fixed >= 0.0) return fixed;
  return 1.0 - eta0 * std::exp(-static_cast<double>(t) / horizon);
}

}  // namespace edgemarket::agent
