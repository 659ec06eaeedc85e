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

#include "edgemarket/oracles/auction_oracle.h"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace edgemarket::oracles {

ReferenceAuction BruteForceAuction(std::span<const double> prices,
                                   std::span<const std::uint64_t> tie_keys,
                                   int availability) {
  ReferenceAuction ref;
  const std::size_t n = prices.size();
  bool any_loser = false;
  double top_loser = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    int beaten_by = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (prices[j] > prices[i] ||
          (prices[j] == prices[i] && tie_keys[j] < tie_keys[i])) {
        ++beaten_by;
      }
    }
    if (beaten_by < availability) {
      ref.winners.push_back(i);
    } else if (!any_loser || prices[i] > top_loser) {
      any_loser = true;
      top_loser = prices[i];
    }
  }
  ref.clearing_price = any_loser && availability > 0 ? top_loser : 0.0;
  return ref;
}

CheckResult CheckAuction(int instances, std::uint64_t seed,
                         const TypeAuctionFn& auction, int max_bids,
                         int max_availability) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult result{"auction", true, "", 0.0};
  sim::Rng gen(seed);
  for (int it = 0; it < instances && result.passed; ++it) {
    const int n = 1 + static_cast<int>(gen.UniformInt(max_bids));
    const int avail = 1 + static_cast<int>(gen.UniformInt(max_availability));
    std::vector<market::Bid> bids(n);
    std::vector<double> prices(n);
    for (int i = 0; i < n; ++i) {
      prices[i] = static_cast<double>(gen.UniformInt(6)) * 0.25;
      bids[i].request = i;
      bids[i].bidder = i;
      bids[i].price = prices[i];
    }
    const std::uint64_t tie_seed = gen.NextU64();
    sim::Rng ties(tie_seed);
    const market::TypeAuctionResult got = auction(bids, avail, ties);

    // The implementation draws one key per bid in submission order.
    sim::Rng replay(tie_seed);
    std::vector<std::uint64_t> keys(n);
    for (auto& k : keys) k = replay.NextU64();
    const ReferenceAuction want = BruteForceAuction(prices, keys, avail);

    std::vector<std::size_t> got_winners = got.winners;
    std::sort(got_winners.begin(), got_winners.end());
    if (got_winners != want.winners ||
        got.clearing_price != want.clearing_price) {
      std::ostringstream os;
      os << "instance " << it << " (bids=" << n << ", n_k=" << avail
         << "): clearing " << got.clearing_price << " vs oracle "
         << want.clearing_price << ", winners " << got_winners.size()
         << " vs " << want.winners.size();
      result.passed = false;
      result.detail = os.str();
    }
  }
  result.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  if (result.passed) {
    result.detail = std::to_string(instances) + " instances match";
  }
  return result;
}

market::TypeAuctionResult FirstPriceAuction(std::span<const market::Bid> bids,
                                            int availability, sim::Rng& ties) {
  market::TypeAuctionResult r = market::RunTypeAuction(bids, availability, ties);
  if (!r.winners.empty()) r.clearing_price = bids[r.winners.back()].price;
  return r;
}

}  // namespace edgemarket::oracles
