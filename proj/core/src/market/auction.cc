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

#include "edgemarket/market/auction.h"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace edgemarket::market {

TypeAuctionResult RunTypeAuction(std::span<const Bid> bids, int availability,
                                 sim::Rng& ties) {
  TypeAuctionResult result;
  result.type = bids.empty() ? 0 : bids.front().type;
  result.availability = availability;
  if (bids.empty()) return result;

  if (availability <= 0) {
    result.rejected.resize(bids.size());
    std::iota(result.rejected.begin(), result.rejected.end(), 0);
    return result;
  }

  // One tie key per bid, drawn in submission order.
  std::vector<std::uint64_t> key(bids.size());
  for (auto& k : key) k = ties.NextU64();

  std::vector<std::size_t> order(bids.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (bids[a].price != bids[b].price) return bids[a].price > bids[b].price;
    return key[a] < key[b];
  });

  const std::size_t slots = static_cast<std::size_t>(availability);
  const std::size_t n_win = std::min(slots, bids.size());
  result.winners.assign(order.begin(), order.begin() + n_win);
  result.rejected.assign(order.begin() + n_win, order.end());
  result.clearing_price = bids.size() > slots ? bids[order[slots]].price : 0.0;
  return result;
}

AuctionRoundResult RunAuction(std::span<const Bid> bids,
                              std::span<const int> availability,
                              sim::Rng& ties) {
  AuctionRoundResult round;
  round.outcome.assign(bids.size(), 0);
  for (std::size_t k = 0; k < availability.size(); ++k) {
    std::vector<std::size_t> index;
    std::vector<Bid> subset;
    for (std::size_t i = 0; i < bids.size(); ++i) {
      if (bids[i].type == static_cast<TypeId>(k)) {
        index.push_back(i);
        subset.push_back(bids[i]);
      }
    }
    if (subset.empty()) continue;
    TypeAuctionResult r = RunTypeAuction(subset, availability[k], ties);
    r.type = static_cast<TypeId>(k);
    for (auto& w : r.winners) {
      w = index[w];
      round.outcome[w] = 1;
    }
    for (auto& l : r.rejected) l = index[l];
    round.per_type.push_back(std::move(r));
  }
  return round;
}

RebidDecision HandleRebid(const Bid& lost, sim::Step now, int max_rebids) {
  if (lost.rebid_count < max_rebids && now < lost.deadline) {
    return RebidDecision::kRequeue;
  }
  return RebidDecision::kFinalLoss;
}

}  // namespace edgemarket::market
