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

#ifndef EDGEMARKET_NN_ARCHITECTURE_H_
#define EDGEMARKET_NN_ARCHITECTURE_H_

namespace edgemarket::nn {

// Sizes of every network a bidder owns. Two bidders can exchange gradients
// only if their architectures compare equal.
struct Architecture {
  int num_types = 2;
  int stack_depth = 4;
  int hidden = 32;
  int price_levels = 11;
  int curiosity_hidden = 32;
  int credit_hidden = 16;
  int credit_attention = 16;
  int credit_segments = 50;

  // Per type: pipeline count and min time-to-deadline; then total resource,
  // vehicle count, utilization, previous wealth; previous payment per type;
  // previous extrinsic reward.
  int state_dim() const { return 3 * num_types + 5; }
  int input_dim() const { return state_dim() * stack_depth; }
  // Type one-hot, time-to-deadline, resource amount, rebid flag.
  int bid_feature_dim() const { return num_types + 3; }
  // Backoff plus one class per price level.
  int action_classes() const { return price_levels + 1; }
  // Segment summary: mean state, mean action one-hot, mean extrinsic reward,
  // decision count, and the two long-term preference weights.
  int credit_input_dim() const { return state_dim() + action_classes() + 4; }

  bool operator==(const Architecture&) const = default;
};

}  // namespace edgemarket::nn

#endif  // EDGEMARKET_NN_ARCHITECTURE_H_
