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

#include "edgemarket/market/types.h"

#include <stdexcept>

namespace edgemarket::market {

std::vector<CommodityType> DefaultCommodityTypes() {
  return {
      CommodityType{.id = 0,
                    .name = "F1",
                    .resource_units = 80,
                    .deadline_window = 100,
                    .uplink_mbit = 0.4,
                    .downlink_mbit = 0.0,
                    .arrival_period = 100},
      CommodityType{.id = 1,
                    .name = "F2",
                    .resource_units = 80,
                    .deadline_window = 500,
                    .uplink_mbit = 4.0,
                    .downlink_mbit = 0.4,
                    .arrival_period = 500},
  };
}

void ValidateCommodityType(const CommodityType& type) {
  if (type.resource_units <= 0) {
    throw std::invalid_argument("commodity " + type.name +
                                ": resource_units must be positive");
  }
  if (type.deadline_window <= 0) {
    throw std::invalid_argument("commodity " + type.name +
                                ": deadline_window must be positive");
  }
  if (type.arrival_period <= 0) {
    throw std::invalid_argument("commodity " + type.name +
                                ": arrival_period must be positive");
  }
  if (type.uplink_mbit < 0.0 || type.downlink_mbit < 0.0) {
    throw std::invalid_argument("commodity " + type.name +
                                ": data sizes must be non-negative");
  }
}

}  // namespace edgemarket::market
