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

#ifndef EDGEMARKET_SCENARIOS_REPORT_H_
#define EDGEMARKET_SCENARIOS_REPORT_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "edgemarket/scenarios/metrics.h"

namespace edgemarket::scenarios {

struct Estimate {
  double mean = 0.0;
  double half_width = 0.0;  // 95% CI half-width, 0 with fewer than 2 values
  int n = 0;

  double lo() const { return mean - half_width; }
  double hi() const { return mean + half_width; }
};

// Two-sided 97.5% quantile of Student's t.
double StudentT975(int dof);
Estimate MeanCi95(std::span<const double> values);

// P(X >= successes) for X ~ Binomial(trials, 1/2).
double SignTestPValue(int successes, int trials);

double PearsonCorrelation(std::span<const double> x, std::span<const double> y);

// Scalar outcomes of one seed, computed from its metrics rows alone.
//   utility            mean per-bidder window utility
//   ofr                pooled final losses / resolved requests
//   fairness, beta, load_variance   window means
//   retrain_fraction   share of learner windows that retrained
//   fairness_ofr_corr  corr(fairness, -OFR) over windows
//   ofr_early/late, fairness_early/late   first and last quarter of windows
// Per-algorithm variants are keyed "<metric>/<algo>".
struct SeedSummary {
  std::uint64_t seed = 0;
  std::map<std::string, double> values;
};

SeedSummary SummarizeMetrics(const std::vector<MetricRow>& rows,
                             std::uint64_t seed);

struct BidderOfr {
  int bidder = 0;
  std::string algo;
  double ofr = 0.0;
  double resolved = 0.0;
};

// Pooled OFR of every bidder over the whole run, in bidder order.
std::vector<BidderOfr> PerBidderOfr(const std::vector<MetricRow>& rows);

struct RunReport {
  std::vector<SeedSummary> seeds;
  std::map<std::string, Estimate> aggregate;
};

RunReport BuildReport(std::vector<SeedSummary> seeds);

// Reads every <dir>/seed_<n>/metrics.csv, in seed order.
RunReport AggregateDirectory(const std::string& dir);

// Stable, sorted-key JSON. `notes` records the run choices (horizon, seeds,
// population, ...).
std::string ReportToJson(const RunReport& report,
                         const std::map<std::string, std::string>& notes);

}  // namespace edgemarket::scenarios

#endif  // EDGEMARKET_SCENARIOS_REPORT_H_
