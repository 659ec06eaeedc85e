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

#ifndef EDGEMARKET_SIMCORE_TRANSMISSION_H_
#define EDGEMARKET_SIMCORE_TRANSMISSION_H_

#include <optional>

#include "edgemarket/simcore/clock.h"

namespace edgemarket::sim {

struct RadioConfig {
  double radius_m = 65.0;
  // Linear 802.11ac throughput model: slope * distance + intercept (Mbps).
  double slope_mbps_per_m = -26.0;
  double intercept_mbps = 1690.0;
  // The linear model hits zero at the coverage edge; clamp at its value one
  // metre inside.
  double floor_mbps = 26.0;
};

double ThroughputMbps(double distance_m, const RadioConfig& radio = {});

// Steps needed to move `data_mbit` over the air at `distance_m`. Returns
// nullopt when the vehicle is outside coverage.
std::optional<Step> TransmissionDelay(double data_mbit, double distance_m,
                                      const RadioConfig& radio = {});

}  // namespace edgemarket::sim

#endif  // EDGEMARKET_SIMCORE_TRANSMISSION_H_
