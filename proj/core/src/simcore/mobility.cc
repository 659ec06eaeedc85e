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

#include "edgemarket/simcore/mobility.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace edgemarket::sim {

MobilityConfig TrainMobility() {
  MobilityConfig c;
  c.arrival_rate_per_s = 1.0 / 2.2;
  c.speed_kmh = 10.0;
  c.green_s = 30.0;
  c.red_s = 30.0;
  return c;
}

MobilityConfig TestMobility() {
  MobilityConfig c;
  c.arrival_rate_per_s = 1.0;
  c.speed_kmh = 30.0;
  c.green_s = 15.0;
  c.red_s = 30.0;
  return c;
}

VehicleTrack::VehicleTrack(VehicleId id, Axis axis, double speed_kmh,
                           std::vector<Waypoint> path)
    : id_(id), axis_(axis), speed_kmh_(speed_kmh), path_(std::move(path)) {
  if (path_.size() < 2) throw std::invalid_argument("track needs 2 waypoints");
}

double VehicleTrack::DistanceAt(Step t) const {
  if (t <= path_.front().t) return std::abs(path_.front().position_m);
  if (t >= path_.back().t) return std::abs(path_.back().position_m);
  for (std::size_t i = 1; i < path_.size(); ++i) {
    const Waypoint& a = path_[i - 1];
    const Waypoint& b = path_[i];
    if (t <= b.t) {
      if (b.t == a.t) return std::abs(b.position_m);
      const double f =
          static_cast<double>(t - a.t) / static_cast<double>(b.t - a.t);
      return std::abs(a.position_m + f * (b.position_m - a.position_m));
    }
  }
  return std::abs(path_.back().position_m);
}

MobilityModel::MobilityModel(MobilityConfig config, Rng rng)
    : config_(config), rng_(rng) {
  if (config_.arrival_rate_per_s > 0.0) {
    next_arrival_s_ = rng_.Exponential(1.0 / config_.arrival_rate_per_s);
  }
}

bool MobilityModel::IsGreen(Axis axis, double t_s) const {
  const double cycle = config_.green_s + config_.red_s;
  const double offset = axis == Axis::kNorthSouth ? 0.0 : cycle / 2.0;
  double phase = std::fmod(t_s - offset, cycle);
  if (phase < 0.0) phase += cycle;
  return phase < config_.green_s;
}

VehicleTrack MobilityModel::BuildTrack(VehicleId id, Step spawn, Axis axis,
                                       double speed) {
  const double m_per_step = speed / 3.6 / 1000.0;
  const double r = config_.radius_m;
  const double stop = config_.stop_line_m;
  std::vector<Waypoint> path;
  path.push_back({spawn, -r});
  const Step at_stop =
      spawn + static_cast<Step>(std::ceil((r - stop) / m_per_step));
  path.push_back({at_stop, -stop});
  Step leave = at_stop;
  if (!IsGreen(axis, static_cast<double>(at_stop) / kStepsPerSecond)) {
    // Wait for the next green phase, scanning in 100 ms increments.
    while (!IsGreen(axis, static_cast<double>(leave) / kStepsPerSecond)) {
      leave += 100;
    }
    path.push_back({leave, -stop});
  }
  const Step out = leave + static_cast<Step>(std::ceil((r + stop) / m_per_step));
  path.push_back({out, r});
  return VehicleTrack(id, axis, speed, std::move(path));
}

std::optional<VehicleTrack> MobilityModel::Next() {
  if (!(config_.arrival_rate_per_s > 0.0)) return std::nullopt;
  const Step spawn =
      static_cast<Step>(std::llround(next_arrival_s_ * kStepsPerSecond));
  const Axis axis = rng_.Bernoulli(0.5) ? Axis::kNorthSouth : Axis::kEastWest;
  double speed = config_.speed_kmh;
  if (config_.speed_jitter > 0.0) {
    speed *= rng_.Uniform(1.0 - config_.speed_jitter,
                          1.0 + config_.speed_jitter);
  }
  next_arrival_s_ += rng_.Exponential(1.0 / config_.arrival_rate_per_s);
  return BuildTrack(next_id_++, spawn, axis, speed);
}

std::vector<VehicleTrack> SpawnVehicles(const MobilityConfig& config, Rng rng,
                                        Step horizon) {
  MobilityModel model(config, rng);
  std::vector<VehicleTrack> out;
  while (auto track = model.Next()) {
    if (track->spawn() >= horizon) break;
    out.push_back(std::move(*track));
  }
  return out;
}

std::vector<int> ConcurrentCounts(const std::vector<VehicleTrack>& tracks,
                                  Step horizon) {
  std::vector<int> delta(static_cast<std::size_t>(horizon) + 1, 0);
  for (const auto& t : tracks) {
    const Step a = std::clamp<Step>(t.spawn(), 0, horizon);
    const Step b = std::clamp<Step>(t.exit(), 0, horizon);
    delta[a] += 1;
    delta[b] -= 1;
  }
  std::vector<int> counts(static_cast<std::size_t>(horizon));
  int running = 0;
  for (Step i = 0; i < horizon; ++i) {
    running += delta[i];
    counts[i] = running;
  }
  return counts;
}

}  // namespace edgemarket::sim
