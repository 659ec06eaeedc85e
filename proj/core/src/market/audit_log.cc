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

#include "edgemarket/market/audit_log.h"

#include <stdexcept>

namespace edgemarket::market {

AuctionAuditLog::AuctionAuditLog(const std::string& path)
    : out_(std::make_unique<std::ofstream>(path)) {
  if (!*out_) throw std::runtime_error("cannot open audit log " + path);
  *out_ << "step,type,n_k,bid_count,clearing_price,winners,rejections\n";
}

void AuctionAuditLog::Record(sim::Step step, const TypeAuctionResult& result,
                             std::span<const Bid> bids,
                             int post_auction_rejections) {
  if (!out_) return;
  *out_ << step << ',' << result.type << ',' << result.availability << ','
        << (result.winners.size() + result.rejected.size()) << ','
        << result.clearing_price << ',';
  for (std::size_t i = 0; i < result.winners.size(); ++i) {
    if (i) *out_ << ';';
    *out_ << bids[result.winners[i]].bidder;
  }
  *out_ << ',' << (result.rejected.size() + post_auction_rejections) << '\n';
}

}  // namespace edgemarket::market
