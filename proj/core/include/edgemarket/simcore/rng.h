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

#ifndef EDGEMARKET_SIMCORE_RNG_H_
#define EDGEMARKET_SIMCORE_RNG_H_

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace edgemarket::sim {

// Named substreams. Each one is seeded independently from the master seed so
// drawing from one never perturbs another.
enum class Stream : std::uint64_t {
  kMobility = 1,
  kRequests = 2,
  kAuctionTies = 3,
  kPreferences = 4,
  kLearningInit = 5,
  kExploration = 6,
};

std::string_view StreamName(Stream s);

// Deterministic generator. Distribution transforms are written out here
// rather than taken from <random> so trajectories do not depend on the
// standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1).
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Uniform integer on [0, n). n must be positive.
  std::uint64_t UniformInt(std::uint64_t n);

  bool Bernoulli(double p) { return Uniform() < p; }

  double Exponential(double mean);

  // Number of Bernoulli(1/mean) trials up to and including the first
  // success; mean >= 1.
  std::int64_t Geometric(double mean);

  // Index drawn from an unnormalized non-negative weight vector.
  std::size_t Categorical(std::span<const double> weights);

  double Normal(double mean, double stddev);

 private:
  std::mt19937_64 engine_;
};

class RngStreams {
 public:
  explicit RngStreams(std::uint64_t master_seed) : master_(master_seed) {}

  std::uint64_t master_seed() const { return master_; }

  // Fresh generator for (stream, sub). `sub` separates per-entity streams,
  // e.g. one exploration stream per bidder.
  Rng Get(Stream stream, std::uint64_t sub = 0) const;

  std::uint64_t SeedFor(Stream stream, std::uint64_t sub = 0) const;

 private:
  std::uint64_t master_;
};

std::uint64_t SplitMix64(std::uint64_t x);

}  // namespace edgemarket::sim

#endif  // EDGEMARKET_SIMCORE_RNG_H_
