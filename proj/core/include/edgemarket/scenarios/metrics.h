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

#ifndef EDGEMARKET_SCENARIOS_METRICS_H_
#define EDGEMARKET_SCENARIOS_METRICS_H_

#include <string>
#include <vector>

#include "edgemarket/simcore/clock.h"

namespace edgemarket::scenarios {

// Bidder id used for market-wide rows.
inline constexpr int kSystemBidder = -1;

// One row of metrics.csv: step,window,bidder,algo,metric,value.
struct MetricRow {
  sim::Step step = 0;
  long window = 0;
  int bidder = kSystemBidder;
  std::string algo;
  std::string metric;
  double value = 0.0;
};

inline constexpr char kMetricsHeader[] = "step,window,bidder,algo,metric,value";

// Shortest text that reads back to the same double.
std::string FormatValue(double v);

// Values are written with round-trip precision so aggregation can re-read
// them without loss.
std::string FormatMetricRow(const MetricRow& row);
void WriteMetricsCsv(const std::vector<MetricRow>& rows,
                     const std::string& path);
// Throws std::runtime_error on a missing file or a malformed header.
std::vector<MetricRow> ReadMetricsCsv(const std::string& path);

}  // namespace edgemarket::scenarios

#endif  // EDGEMARKET_SCENARIOS_METRICS_H_
