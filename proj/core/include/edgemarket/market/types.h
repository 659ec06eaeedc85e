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

#ifndef EDGEMARKET_MARKET_TYPES_H_
#define EDGEMARKET_MARKET_TYPES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "edgemarket/simcore/clock.h"

namespace edgemarket::market {

using BidderId = int;
using TypeId = int;
using SellerId = int;
using RequestId = std::int64_t;

// One service type (commodity). Work is `resource_units`; it must complete
// within `deadline_window` steps of request creation.
struct CommodityType {
  TypeId id = 0;
  std::string name;
  int resource_units = 80;
  sim::Step deadline_window = 100;
  double uplink_mbit = 0.0;
  double downlink_mbit = 0.0;
  sim::Step arrival_period = 100;
};

// F1 (motion planning) and F2 (image segmentation).
std::vector<CommodityType> DefaultCommodityTypes();

void ValidateCommodityType(const CommodityType& type);

struct Bid {
  RequestId request = 0;
  BidderId bidder = 0;
  TypeId type = 0;
  double price = 0.0;
  sim::Step created = 0;
  sim::Step deadline = 0;
  int rebid_count = 0;
  // Transport delays fixed at submission from the bidder's distance.
  sim::Step uplink_delay = 0;
  sim::Step downlink_delay = 0;
};

}  // namespace edgemarket::market

#endif  // EDGEMARKET_MARKET_TYPES_H_
