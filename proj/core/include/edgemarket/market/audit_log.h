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

#ifndef EDGEMARKET_MARKET_AUDIT_LOG_H_
#define EDGEMARKET_MARKET_AUDIT_LOG_H_

#include <fstream>
#include <memory>
#include <span>
#include <string>

#include "edgemarket/market/auction.h"
#include "edgemarket/simcore/clock.h"

namespace edgemarket::market {

// Per-round CSV: step,type,n_k,bid_count,clearing_price,winners,rejections.
// `winners` is a ';'-separated list of bidder ids.
class AuctionAuditLog {
 public:
  AuctionAuditLog() = default;
  explicit AuctionAuditLog(const std::string& path);

  bool enabled() const { return out_ != nullptr; }
  void Record(sim::Step step, const TypeAuctionResult& result,
              std::span<const Bid> bids, int post_auction_rejections);

 private:
  std::unique_ptr<std::ofstream> out_;
};

}  // namespace edgemarket::market

#endif  // EDGEMARKET_MARKET_AUDIT_LOG_H_
