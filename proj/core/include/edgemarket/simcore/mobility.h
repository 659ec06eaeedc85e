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

#ifndef EDGEMARKET_SIMCORE_MOBILITY_H_
#define EDGEMARKET_SIMCORE_MOBILITY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edgemarket/simcore/clock.h"
#include "edgemarket/simcore/rng.h"

namespace edgemarket::sim {

using VehicleId = std::int64_t;

enum class Axis { kNorthSouth, kEastWest };

// Synthetic 4-way intersection. Vehicles enter at the coverage edge on one of
// the two axes, stop at the stop line while their light is red, and leave at
// the opposite edge.
struct MobilityConfig {
  double arrival_rate_per_s = 1.0 / 2.2;
  double speed_kmh = 10.0;
  // Multiplicative speed jitter, uniform in [1 - j, 1 + j].
  double speed_jitter = 0.0;
  double radius_m = 65.0;
  double stop_line_m = 5.0;
  double green_s = 30.0;
  double red_s = 30.0;
};

MobilityConfig TrainMobility();
MobilityConfig TestMobility();

struct Waypoint {
  Step t;
  double position_m;  // signed position along the axis; ACA sits at 0
};

class VehicleTrack {
 public:
  VehicleTrack(VehicleId id, Axis axis, double speed_kmh,
               std::vector<Waypoint> path);

  VehicleId id() const { return id_; }
  Axis axis() const { return axis_; }
  double speed_kmh() const { return speed_kmh_; }
  Step spawn() const { return path_.front().t; }
  Step exit() const { return path_.back().t; }
  const std::vector<Waypoint>& path() const { return path_; }

  bool InCoverage(Step t) const { return t >= spawn() && t < exit(); }

  // Distance to the ACA in metres; clamps outside [spawn, exit].
  double DistanceAt(Step t) const;

 private:
  VehicleId id_;
  Axis axis_;
  double speed_kmh_;
  std::vector<Waypoint> path_;
};

// Produces tracks in spawn order from the mobility substream.
class MobilityModel {
 public:
  MobilityModel(MobilityConfig config, Rng rng);

  // Next vehicle, or nullopt when the arrival rate is zero.
  std::optional<VehicleTrack> Next();

  bool IsGreen(Axis axis, double t_s) const;

  const MobilityConfig& config() const { return config_; }

 private:
  VehicleTrack BuildTrack(VehicleId id, Step spawn, Axis axis, double speed);

  MobilityConfig config_;
  Rng rng_;
  double next_arrival_s_ = 0.0;
  VehicleId next_id_ = 0;
};

// All tracks spawning before `horizon`.
std::vector<VehicleTrack> SpawnVehicles(const MobilityConfig& config, Rng rng,
                                        Step horizon);

// Number of vehicles in coverage at each step in [0, horizon).
std::vector<int> ConcurrentCounts(const std::vector<VehicleTrack>& tracks,
                                  Step horizon);

}  // namespace edgemarket::sim

#endif  // EDGEMARKET_SIMCORE_MOBILITY_H_
