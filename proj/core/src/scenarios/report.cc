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

#include "edgemarket/scenarios/report.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace edgemarket::scenarios {
namespace {

struct Pooled {
  double losses = 0.0;
  double resolved = 0.0;
  double Rate() const { return resolved > 0.0 ? losses / resolved : 0.0; }
};

double Mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace

double StudentT975(int dof) {
  static constexpr double kTable[] = {
      12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228,
      2.201,  2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093, 2.086,
      2.080,  2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045, 2.042};
  if (dof < 1) throw std::invalid_argument("StudentT975: dof < 1");
  if (dof <= 30) return kTable[dof - 1];
  if (dof <= 60) return 2.000;
  if (dof <= 120) return 1.980;
  return 1.960;
}

Estimate MeanCi95(std::span<const double> values) {
  Estimate e;
  e.n = static_cast<int>(values.size());
  if (e.n == 0) return e;
  double sum = 0.0;
  for (double v : values) sum += v;
  e.mean = sum / e.n;
  if (e.n < 2) return e;
  double ss = 0.0;
  for (double v : values) ss += (v - e.mean) * (v - e.mean);
  const double sd = std::sqrt(ss / (e.n - 1));
  e.half_width = StudentT975(e.n - 1) * sd / std::sqrt(static_cast<double>(e.n));
  return e;
}

double SignTestPValue(int successes, int trials) {
  if (trials <= 0) return 1.0;
  double p = 0.0;
  for (int k = successes; k <= trials; ++k) {
    double c = 1.0;
    for (int i = 0; i < k; ++i) c = c * (trials - i) / (i + 1);
    p += c;
  }
  return p / std::pow(2.0, trials);
}

double PearsonCorrelation(std::span<const double> x,
                          std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) return 0.0;
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

SeedSummary SummarizeMetrics(const std::vector<MetricRow>& rows,
                             std::uint64_t seed) {
  // (window, bidder) -> metric -> value
  std::map<std::pair<long, int>, std::map<std::string, double>> cells;
  std::map<int, std::string> algo_of;
  std::map<long, std::map<std::string, double>> system;
  for (const MetricRow& r : rows) {
    if (r.bidder == kSystemBidder) {
      system[r.window][r.metric] = r.value;
    } else {
      cells[{r.window, r.bidder}][r.metric] = r.value;
      algo_of[r.bidder] = r.algo;
    }
  }
  std::set<std::string> algos;
  for (const auto& [b, a] : algo_of) algos.insert(a);

  SeedSummary s;
  s.seed = seed;
  auto per_algo = [&](const std::string& filter) {
    Pooled pooled;
    std::vector<double> utility;
    long learner_windows = 0, retrained = 0;
    for (const auto& [key, m] : cells) {
      if (!filter.empty() && algo_of[key.second] != filter) continue;
      const double resolved = m.count("resolved") ? m.at("resolved") : 0.0;
      if (m.count("ofr")) {
        pooled.losses += m.at("ofr") * resolved;
        pooled.resolved += resolved;
      }
      if (m.count("utility")) utility.push_back(m.at("utility"));
      if (algo_of[key.second] != "random" && m.count("retrain")) {
        ++learner_windows;
        if (m.at("retrain") > 0.0) ++retrained;
      }
    }
    const std::string suffix = filter.empty() ? "" : "/" + filter;
    s.values["ofr" + suffix] = pooled.Rate();
    s.values["utility" + suffix] = Mean(utility);
    s.values["retrain_fraction" + suffix] =
        learner_windows > 0
            ? static_cast<double>(retrained) / static_cast<double>(learner_windows)
            : 0.0;
  };
  per_algo("");
  for (const std::string& a : algos) per_algo(a);

  std::vector<long> windows;
  for (const auto& [w, m] : system) {
    if (m.count("fairness")) windows.push_back(w);
  }
  std::vector<double> fairness, neg_ofr, beta, load_var, window_ofr;
  for (long w : windows) {
    const auto& m = system.at(w);
    fairness.push_back(m.at("fairness"));
    beta.push_back(m.count("beta") ? m.at("beta") : 0.0);
    load_var.push_back(m.count("load_variance") ? m.at("load_variance") : 0.0);
    Pooled p;
    for (auto it = cells.lower_bound({w, kSystemBidder});
         it != cells.end() && it->first.first == w; ++it) {
      const auto& c = it->second;
      const double resolved = c.count("resolved") ? c.at("resolved") : 0.0;
      if (c.count("ofr")) {
        p.losses += c.at("ofr") * resolved;
        p.resolved += resolved;
      }
    }
    window_ofr.push_back(p.Rate());
    neg_ofr.push_back(-p.Rate());
  }
  s.values["fairness"] = Mean(fairness);
  s.values["beta"] = Mean(beta);
  s.values["load_variance"] = Mean(load_var);
  s.values["fairness_ofr_corr"] = PearsonCorrelation(fairness, neg_ofr);
  const std::size_t q = std::max<std::size_t>(1, windows.size() / 4);
  auto slice_mean = [](const std::vector<double>& v, std::size_t from,
                       std::size_t to) {
    if (from >= to) return 0.0;
    double sum = 0.0;
    for (std::size_t i = from; i < to; ++i) sum += v[i];
    return sum / static_cast<double>(to - from);
  };
  if (!windows.empty()) {
    const std::size_t n = windows.size();
    s.values["ofr_early"] = slice_mean(window_ofr, 0, std::min(q, n));
    s.values["ofr_late"] = slice_mean(window_ofr, n - std::min(q, n), n);
    s.values["fairness_early"] = slice_mean(fairness, 0, std::min(q, n));
    s.values["fairness_late"] = slice_mean(fairness, n - std::min(q, n), n);
  }
  for (const MetricRow& r : rows) {
    if (r.bidder == kSystemBidder &&
        (r.metric == "capacity_violations" || r.metric == "future_reads" ||
         r.metric == "budget_violations")) {
      s.values[r.metric] = r.value;
    }
  }
  return s;
}

std::vector<BidderOfr> PerBidderOfr(const std::vector<MetricRow>& rows) {
  // ofr and resolved of the same (window, bidder) are paired by key.
  std::map<std::pair<long, int>, std::pair<double, double>> cells;
  std::map<int, std::string> algo_of;
  for (const MetricRow& r : rows) {
    if (r.bidder == kSystemBidder) continue;
    if (r.metric == "ofr") cells[{r.window, r.bidder}].first = r.value;
    if (r.metric == "resolved") cells[{r.window, r.bidder}].second = r.value;
    algo_of[r.bidder] = r.algo;
  }
  std::map<int, Pooled> pooled;
  for (const auto& [key, cell] : cells) {
    pooled[key.second].losses += cell.first * cell.second;
    pooled[key.second].resolved += cell.second;
  }
  std::vector<BidderOfr> out;
  for (const auto& [bidder, algo] : algo_of) {
    const Pooled& p = pooled[bidder];
    out.push_back({bidder, algo, p.Rate(), p.resolved});
  }
  return out;
}

RunReport BuildReport(std::vector<SeedSummary> seeds) {
  std::sort(seeds.begin(), seeds.end(),
            [](const SeedSummary& a, const SeedSummary& b) {
              return a.seed < b.seed;
            });
  RunReport report;
  std::map<std::string, std::vector<double>> by_key;
  for (const SeedSummary& s : seeds) {
    for (const auto& [k, v] : s.values) by_key[k].push_back(v);
  }
  for (const auto& [k, v] : by_key) report.aggregate[k] = MeanCi95(v);
  report.seeds = std::move(seeds);
  return report;
}

RunReport AggregateDirectory(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<SeedSummary> seeds;
  if (!fs::is_directory(dir)) throw std::runtime_error("no directory " + dir);
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (!entry.is_directory() || name.rfind("seed_", 0) != 0) continue;
    const fs::path csv = entry.path() / "metrics.csv";
    if (!fs::exists(csv)) continue;
    seeds.push_back(SummarizeMetrics(ReadMetricsCsv(csv.string()),
                                     std::stoull(name.substr(5))));
  }
  return BuildReport(std::move(seeds));
}

std::string ReportToJson(const RunReport& report,
                         const std::map<std::string, std::string>& notes) {
  nlohmann::json j;
  j["notes"] = notes;
  nlohmann::json agg = nlohmann::json::object();
  for (const auto& [k, e] : report.aggregate) {
    agg[k] = {{"mean", e.mean}, {"ci95", e.half_width}, {"n", e.n}};
  }
  j["aggregate"] = agg;
  j["seeds"] = nlohmann::json::array();
  for (const SeedSummary& s : report.seeds) {
    j["seeds"].push_back({{"seed", s.seed}, {"values", s.values}});
  }
  return j.dump(2) + "\n";
}

}  // namespace edgemarket::scenarios
