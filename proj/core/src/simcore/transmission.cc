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

#include "edgemarket/simcore/transmission.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace edgemarket::sim {

double ThroughputMbps(double distance_m, const RadioConfig& radio) {
  const double linear =
      radio.slope_mbps_per_m * distance_m + radio.intercept_mbps;
  return std::max(linear, radio.floor_mbps);
}

std::optional<Step> TransmissionDelay(double data_mbit, double distance_m,
                                      const RadioConfig& radio) {
  if (data_mbit < 0.0 || distance_m < 0.0) {
    throw std::invalid_argument("TransmissionDelay: negative input");
  }
  if (distance_m > radio.radius_m) return std::nullopt;
  if (data_mbit == 0.0) return Step{0};
  const double ms = data_mbit / ThroughputMbps(distance_m, radio) * 1000.0;
  // Guard against 1.0000000000000002-style rounding pushing an exact
  // millisecond count up by one.
  return static_cast<Step>(std::ceil(ms - 1e-9));
}

}  // namespace edgemarket::sim
