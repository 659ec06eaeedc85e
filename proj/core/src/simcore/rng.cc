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

#include "edgemarket/simcore/rng.h"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace edgemarket::sim {

std::string_view StreamName(Stream s) {
  switch (s) {
    case Stream::kMobility:
      return "mobility";
    case Stream::kRequests:
      return "requests";
    case Stream::kAuctionTies:
      return "auction-ties";
    case Stream::kPreferences:
      return "preference-resampling";
    case Stream::kLearningInit:
      return "learning-init";
    case Stream::kExploration:
      return "exploration";
  }
  return "unknown";
}

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Rng::UniformInt(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("UniformInt: n must be positive");
  // Rejection sampling removes modulo bias.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

double Rng::Exponential(double mean) { return -mean * std::log1p(-Uniform()); }

std::int64_t Rng::Geometric(double mean) {
  if (mean <= 1.0) return 1;
  const double p = 1.0 / mean;
  // Inverse CDF of the geometric distribution on {1, 2, ...}.
  const double u = Uniform();
  return 1 + static_cast<std::int64_t>(std::floor(std::log1p(-u) /
                                                  std::log1p(-p)));
}

std::size_t Rng::Categorical(std::span<const double> weights) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0.0)) throw std::invalid_argument("Categorical: zero mass");
  double u = Uniform() * total;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (u < weights[i]) return i;
    u -= weights[i];
  }
  // Rounding can leave u marginally above the last cumulative weight.
  for (std::size_t i = weights.size(); i-- > 0;) {
    if (weights[i] > 0.0) return i;
  }
  return weights.size() - 1;
}

double Rng::Normal(double mean, double stddev) {
  // Box-Muller; one draw per call keeps the stream position simple.
  double u1 = Uniform();
  while (u1 <= 0.0) u1 = Uniform();
  const double u2 = Uniform();
  return mean + stddev * std::sqrt(-2.0 * std::log(u1)) *
                    std::cos(2.0 * 3.14159265358979323846 * u2);
}

std::uint64_t RngStreams::SeedFor(Stream stream, std::uint64_t sub) const {
  std::uint64_t h = SplitMix64(master_);
  h = SplitMix64(h ^ static_cast<std::uint64_t>(stream));
  return SplitMix64(h ^ (sub * 0x632be59bd9b4e019ULL));
}

Rng RngStreams::Get(Stream stream, std::uint64_t sub) const {
  return Rng(SeedFor(stream, sub));
}

}  // namespace edgemarket::sim
