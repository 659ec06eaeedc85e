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

#ifndef EDGEMARKET_MARKET_AUCTION_H_
#define EDGEMARKET_MARKET_AUCTION_H_

#include <cstddef>
#include <span>
#include <vector>

#include "edgemarket/market/types.h"
#include "edgemarket/simcore/rng.h"

namespace edgemarket::market {

// Outcome of the sealed-bid uniform-price auction for one commodity type.
// Indices refer to positions in the bid span passed in.
struct TypeAuctionResult {
  TypeId type = 0;
  int availability = 0;
  std::vector<std::size_t> winners;   // ordered by descending price
  std::vector<std::size_t> rejected;
  double clearing_price = 0.0;
};

struct AuctionRoundResult {
  std::vector<TypeAuctionResult> per_type;
  // z flag per submitted bid (1 = won the auction).
  std::vector<int> outcome;
};

// The n_k highest bids win; ties are broken with draws from `ties`. All
// winners pay the (n_k+1)-th highest price, or 0 when no bid loses.
// Availability 0 rejects every bid.
TypeAuctionResult RunTypeAuction(std::span<const Bid> bids, int availability,
                                 sim::Rng& ties);

// Runs one auction per type present in `availability` (indexed by type id).
AuctionRoundResult RunAuction(std::span<const Bid> bids,
                              std::span<const int> availability,
                              sim::Rng& ties);

enum class RebidDecision { kRequeue, kFinalLoss };

// A lost bid goes back into the bidder's pipeline for the next step when it
// has rebids left and has not reached its deadline.
RebidDecision HandleRebid(const Bid& lost, sim::Step now, int max_rebids = 1);

}  // namespace edgemarket::market

#endif  // EDGEMARKET_MARKET_AUCTION_H_
