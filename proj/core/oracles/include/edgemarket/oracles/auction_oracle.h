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

#ifndef EDGEMARKET_ORACLES_AUCTION_ORACLE_H_
#define EDGEMARKET_ORACLES_AUCTION_ORACLE_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "edgemarket/market/auction.h"
#include "edgemarket/oracles/suite.h"

namespace edgemarket::oracles {

struct ReferenceAuction {
  std::vector<std::size_t> winners;  // ascending bid index
  double clearing_price = 0.0;
};

// Rank counting: bid i wins iff fewer than `availability` bids beat it, where
// j beats i on a higher price or an equal price and a smaller tie key. The
// clearing price is the highest losing price (0 with no loser).
ReferenceAuction BruteForceAuction(std::span<const double> prices,
                                   std::span<const std::uint64_t> tie_keys,
                                   int availability);

using TypeAuctionFn = std::function<market::TypeAuctionResult(
    std::span<const market::Bid>, int, sim::Rng&)>;

// Random instances with up to `max_bids` bids on a coarse price grid (so ties
// occur) and availability in [1, max_availability].
CheckResult CheckAuction(int instances, std::uint64_t seed,
                         const TypeAuctionFn& auction = market::RunTypeAuction,
                         int max_bids = 8, int max_availability = 4);

// Deliberately wrong auction for mutation tests: winners pay their own bid.
market::TypeAuctionResult FirstPriceAuction(std::span<const market::Bid> bids,
                                            int availability, sim::Rng& ties);

}  // namespace edgemarket::oracles

#endif  // EDGEMARKET_ORACLES_AUCTION_ORACLE_H_
