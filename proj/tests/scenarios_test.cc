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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <vector>

#include "edgemarket/baselines/factory.h"
#include "edgemarket/scenarios/config.h"
#include "edgemarket/scenarios/experiments.h"
#include "edgemarket/scenarios/metrics.h"
#include "edgemarket/scenarios/report.h"
#include "edgemarket/scenarios/simulation.h"
#include "gtest/gtest.h"

namespace edgemarket::scenarios {
namespace {

TEST(ConfigTest, PresetsSplitCapacityAcrossTwoSites) {
  const ScenarioConfig train = TrainPreset();
  const ScenarioConfig test = TestPreset();
  ASSERT_EQ(train.sites.size(), 2u);
  ASSERT_EQ(test.sites.size(), 2u);
  EXPECT_DOUBLE_EQ(train.total_capacity(), 60.0);
  EXPECT_DOUBLE_EQ(test.total_capacity(), 10.0);
  EXPECT_EQ(test.sites[0].link_delay, 0);
  EXPECT_GT(test.sites[1].link_delay, 0);
  EXPECT_NO_THROW(ValidateConfig(train));
  EXPECT_NO_THROW(ValidateConfig(test));
}

TEST(ConfigTest, OverridesOnTopOfPreset) {
  const ScenarioConfig c = ParseConfig(R"({
    "preset": "train",
    "capacity": 20,
    "seeds": [7, 8],
    "population": {"ac": 2, "random": 1},
    "training": {"epochs": 4},
    "fixed_preference": [1, 0, 0.5]
  })");
  EXPECT_EQ(c.preset, "train");
  EXPECT_DOUBLE_EQ(c.sites[0].capacity, 10.0);
  EXPECT_DOUBLE_EQ(c.sites[1].capacity, 10.0);
  EXPECT_EQ(c.seeds, (std::vector<std::uint64_t>{7, 8}));
  EXPECT_EQ(c.num_bidders(), 3);
  EXPECT_EQ(c.training.epochs, 4);
  EXPECT_EQ(c.training.tau, TrainPreset().training.tau);
  ASSERT_TRUE(c.fixed_preference.has_value());
  EXPECT_DOUBLE_EQ(c.fixed_preference->utility, 1.0);
  EXPECT_DOUBLE_EQ(c.fixed_preference->failure, 0.0);
}

TEST(ConfigTest, RejectsUnknownAndBadValues) {
  EXPECT_THROW(ParseConfig(R"({"horizon": 5})"), ConfigError);
  EXPECT_THROW(ParseConfig(R"({"learning": {"gama": 0.9}})"), ConfigError);
  EXPECT_THROW(ParseConfig(R"({"preset": "nightly"})"), ConfigError);
  EXPECT_THROW(ParseConfig(R"({"fixed_preference": [1, 0]})"), ConfigError);
  EXPECT_THROW(ParseConfig(R"({"window": "long"})"), ConfigError);
  EXPECT_THROW(ParseConfig("[1, 2]"), ConfigError);
  EXPECT_THROW(ParseConfig("{"), ConfigError);
  EXPECT_THROW(LoadConfig("/nonexistent/config.json"), ConfigError);
}

TEST(ConfigTest, JsonRoundTrip) {
  ScenarioConfig c = TestPreset();
  c.horizon = 1234;
  c.population = {{"moody", 2}, {"random", 1}};
  const std::string text = ConfigToJson(c);
  EXPECT_EQ(ConfigToJson(ParseConfig(text)), text);
}

TEST(ConfigTest, SeedLists) {
  EXPECT_EQ(ParseSeedList("1..4"), (std::vector<std::uint64_t>{1, 2, 3, 4}));
  EXPECT_EQ(ParseSeedList("3,9"), (std::vector<std::uint64_t>{3, 9}));
  EXPECT_EQ(ParseSeedList("5"), (std::vector<std::uint64_t>{5}));
  EXPECT_THROW(ParseSeedList("4..1"), ConfigError);
  EXPECT_THROW(ParseSeedList("x"), ConfigError);
}

TEST(ConfigTest, ShippedConfigsLoad) {
  int n = 0;
  for (const auto& entry :
       std::filesystem::directory_iterator(EDGEMARKET_CONFIG_DIR)) {
    if (entry.path().extension() != ".json") continue;
    EXPECT_NO_THROW(LoadConfig(entry.path().string())) << entry.path();
    ++n;
  }
  EXPECT_GT(n, 0);
}

TEST(MetricsTest, ValuesRoundTrip) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-17, 123456789.0, 0.0}) {
    EXPECT_EQ(std::stod(FormatValue(v)), v);
  }
}

TEST(MetricsTest, CsvRoundTrip) {
  std::vector<MetricRow> rows{{1999, 0, 0, "moody", "ofr", 0.25},
                              {1999, 0, kSystemBidder, "", "fairness", 1.0 / 3.0},
                              {3999, 1, 2, "random", "utility", -0.75}};
  const std::string path =
      (std::filesystem::temp_directory_path() / "scenarios_metrics.csv")
          .string();
  WriteMetricsCsv(rows, path);
  const std::vector<MetricRow> back = ReadMetricsCsv(path);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(back[i].step, rows[i].step);
    EXPECT_EQ(back[i].window, rows[i].window);
    EXPECT_EQ(back[i].bidder, rows[i].bidder);
    EXPECT_EQ(back[i].algo, rows[i].algo);
    EXPECT_EQ(back[i].metric, rows[i].metric);
    EXPECT_EQ(back[i].value, rows[i].value);
  }
  std::filesystem::remove(path);
  EXPECT_THROW(ReadMetricsCsv(path), std::runtime_error);
}

TEST(ReportTest, StudentInterval) {
  EXPECT_NEAR(StudentT975(4), 2.776, 1e-3);
  EXPECT_NEAR(StudentT975(1), 12.706, 1e-3);
  const std::vector<double> v{1, 2, 3, 4, 5};
  const Estimate e = MeanCi95(v);
  EXPECT_DOUBLE_EQ(e.mean, 3.0);
  EXPECT_EQ(e.n, 5);
  // sd = sqrt(2.5)
  EXPECT_NEAR(e.half_width, StudentT975(4) * std::sqrt(2.5 / 5.0), 1e-12);
  EXPECT_EQ(MeanCi95(std::vector<double>{4.0}).half_width, 0.0);
}

TEST(ReportTest, SignTest) {
  EXPECT_DOUBLE_EQ(SignTestPValue(5, 5), 1.0 / 32.0);
  EXPECT_DOUBLE_EQ(SignTestPValue(4, 5), 6.0 / 32.0);
  EXPECT_DOUBLE_EQ(SignTestPValue(0, 5), 1.0);
}

TEST(ReportTest, Pearson) {
  const std::vector<double> x{1, 2, 3, 4};
  EXPECT_NEAR(PearsonCorrelation(x, std::vector<double>{2, 4, 6, 8}), 1.0,
              1e-12);
  EXPECT_NEAR(PearsonCorrelation(x, std::vector<double>{4, 3, 2, 1}), -1.0,
              1e-12);
  // x = (1,2,3,4), y = (1,3,2,4): cov 1.25, var 1.25 each -> 0.8
  EXPECT_NEAR(PearsonCorrelation(x, std::vector<double>{1, 3, 2, 4}), 0.8,
              1e-12);
}

TEST(ReportTest, PooledOfrWeightsByResolved) {
  std::vector<MetricRow> rows{
      {1999, 0, 0, "moody", "ofr", 0.5},
      {1999, 0, 0, "moody", "resolved", 10},
      {1999, 0, 1, "ac", "ofr", 0.0},
      {1999, 0, 1, "ac", "resolved", 30},
      {1999, 0, kSystemBidder, "", "fairness", 0.9},
      {3999, 1, 0, "moody", "ofr", 1.0},
      {3999, 1, 0, "moody", "resolved", 10},
      {3999, 1, kSystemBidder, "", "fairness", 0.7},
  };
  const SeedSummary s = SummarizeMetrics(rows, 1);
  EXPECT_DOUBLE_EQ(s.values.at("ofr"), 15.0 / 50.0);
  EXPECT_DOUBLE_EQ(s.values.at("ofr/moody"), 15.0 / 20.0);
  EXPECT_DOUBLE_EQ(s.values.at("ofr/ac"), 0.0);
  EXPECT_DOUBLE_EQ(s.values.at("fairness"), 0.8);

  const std::vector<BidderOfr> per = PerBidderOfr(rows);
  ASSERT_EQ(per.size(), 2u);
  EXPECT_DOUBLE_EQ(per[0].ofr, 0.75);
  EXPECT_DOUBLE_EQ(per[0].resolved, 20.0);
  EXPECT_EQ(per[1].algo, "ac");
}

std::vector<Participant> RandomBidders(int n, std::uint64_t seed) {
  std::vector<Participant> out;
  for (int m = 0; m < n; ++m) {
    out.push_back(Participant{
        .bidder = std::make_unique<baselines::RandomBidder>(
            11, sim::Rng(seed * 100 + m)),
        .constant_preference = false});
  }
  return out;
}

TEST(SimulationTest, AuditsStayClean) {
  ScenarioConfig c = TestPreset();
  c.population = {{"random", 6}};
  Simulation sim(c, 3, RandomBidders(6, 3));
  sim.Run(20000);
  EXPECT_TRUE(sim.audits().clean());
  EXPECT_GT(sim.audits().capacity_checks, 0);
  EXPECT_GT(sim.audits().observation_checks, 0);
  EXPECT_EQ(sim.windows().size(), 10u);
  for (const WindowSummary& w : sim.windows()) {
    EXPECT_GE(w.fairness, 0.0);
    EXPECT_LE(w.fairness, 1.0);
    EXPECT_GE(w.beta, 0.0);
    EXPECT_LE(w.beta, 1.0);
    for (double ofr : w.ofr) {
      EXPECT_GE(ofr, 0.0);
      EXPECT_LE(ofr, 1.0);
    }
  }
  const LossBreakdown& l = sim.losses();
  EXPECT_EQ(l.expired + l.rejected + l.unplaced + l.dropped + l.flushed,
            sim.total_final_losses());
  EXPECT_GT(sim.total_successes(), 0);
}

TEST(SimulationTest, DelayedFeedbackStaysCausal) {
  ScenarioConfig c = TestPreset();
  c.population = {{"random", 4}};
  c.feedback_delay = 7;
  Simulation sim(c, 5, RandomBidders(4, 5));
  sim.Run(8000);
  EXPECT_EQ(sim.audits().future_reads, 0);
  EXPECT_GT(sim.audits().observation_checks, 0);
}

TEST(SimulationTest, SameSeedSameMetrics) {
  ScenarioConfig c = TestPreset();
  c.population = {{"random", 5}};
  c.horizon = 12000;
  const RunResult a = RunScenario(c, 2, {});
  const RunResult b = RunScenario(c, 2, {});
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(FormatMetricRow(a.rows[i]), FormatMetricRow(b.rows[i]));
  }
  const RunResult other = RunScenario(c, 3, {});
  bool differs = other.rows.size() != a.rows.size();
  for (std::size_t i = 0; !differs && i < a.rows.size(); ++i) {
    differs = FormatMetricRow(a.rows[i]) != FormatMetricRow(other.rows[i]);
  }
  EXPECT_TRUE(differs);
}

TEST(SimulationTest, FinishMetricsAppendsAuditRows) {
  ScenarioConfig c = TestPreset();
  c.population = {{"random", 2}};
  Simulation sim(c, 1, RandomBidders(2, 1));
  sim.Run(2000);
  sim.FinishMetrics();
  bool found = false;
  for (const MetricRow& r : sim.metrics()) {
    if (r.metric == "capacity_violations") {
      found = true;
      EXPECT_EQ(r.bidder, kSystemBidder);
      EXPECT_EQ(r.value, 0.0);
    }
  }
  EXPECT_TRUE(found);
}

}  // namespace
}  // namespace edgemarket::scenarios
