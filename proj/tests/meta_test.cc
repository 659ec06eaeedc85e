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
#include <limits>
#include <thread>
#include <vector>

#include "edgemarket/baselines/factory.h"
#include "edgemarket/meta/coordinator.h"
#include "edgemarket/meta/training.h"
#include "edgemarket/nn/model.h"
#include "edgemarket/oracles/meta_oracle.h"
#include "edgemarket/scenarios/config.h"
#include "gtest/gtest.h"

namespace edgemarket::meta {
namespace {

using baselines::BidderKind;

const oracles::MetaCase& Case() {
  static const oracles::MetaCase c = oracles::RecordMetaCase(2, 2, 5);
  return c;
}

TEST(CoordinatorTest, SingleSubmitMatchesClosedForm) {
  const oracles::MetaCase& c = Case();
  ASSERT_FALSE(c.gradients.empty());
  Coordinator coord(c.theta0, 0.25);
  const SubmitResult r = coord.Submit(c.submitters[0], c.gradients[0]);
  ASSERT_TRUE(r.accepted) << r.diagnostic;
  for (std::size_t i = 0; i < std::size(nn::kAllModules); ++i) {
    const auto& before = c.theta0.Get(nn::kAllModules[i]).values;
    const auto& after = r.snapshot.Get(nn::kAllModules[i]).values;
    const auto& g = c.gradients[0].modules[i].values;
    for (std::size_t j = 0; j < before.size(); ++j) {
      EXPECT_EQ(after[j], before[j] + 0.25 * g[j]);
    }
  }
  EXPECT_EQ(coord.updates(), 1);
  EXPECT_EQ(coord.registry().at(c.submitters[0]), c.gradients[0].shot);
}

TEST(CoordinatorTest, NonFiniteGradientRejected) {
  const oracles::MetaCase& c = Case();
  agent::ShotGradient bad = c.gradients[0];
  bad.modules[1].values[0] = std::numeric_limits<double>::quiet_NaN();
  Coordinator coord(c.theta0, 0.1);
  const SubmitResult r = coord.Submit(0, bad);
  EXPECT_FALSE(r.accepted);
  EXPECT_FALSE(r.diagnostic.empty());
  EXPECT_EQ(coord.rejections(), 1);
  EXPECT_TRUE(nn::BundlesEqual(coord.Snapshot(), c.theta0));
}

TEST(CoordinatorTest, MissingModuleRejected) {
  const oracles::MetaCase& c = Case();
  agent::ShotGradient bad = c.gradients[0];
  bad.modules.pop_back();
  Coordinator coord(c.theta0, 0.1);
  EXPECT_FALSE(coord.Submit(0, bad).accepted);
  EXPECT_TRUE(nn::BundlesEqual(coord.Snapshot(), c.theta0));
}

TEST(CoordinatorTest, ZeroRateKeepsTheta) {
  const oracles::MetaCase& c = Case();
  Coordinator coord(c.theta0, 0.0);
  for (std::size_t i = 0; i < c.gradients.size(); ++i) {
    EXPECT_TRUE(coord.Submit(c.submitters[i], c.gradients[i]).accepted);
  }
  EXPECT_TRUE(nn::BundlesEqual(coord.Snapshot(), c.theta0));
}

TEST(CoordinatorTest, EmptySetIsIdentity) {
  const oracles::MetaCase& c = Case();
  EXPECT_TRUE(nn::BundlesEqual(ApplyClosedForm(c.theta0, {}, 0.1), c.theta0));
  EXPECT_TRUE(MetaUpdateEquivalent(c.theta0, {}, 0.1, c.theta0));
}

TEST(CoordinatorTest, SequentialMatchesIndependentSum) {
  const oracles::MetaCase& c = Case();
  Coordinator coord(c.theta0, c.meta_rate);
  for (std::size_t i = 0; i < c.gradients.size(); ++i) {
    coord.Submit(c.submitters[i], c.gradients[i]);
  }
  const nn::ModelBundle want = oracles::DirectSum(c);
  const nn::ModelBundle got = coord.Snapshot();
  for (const nn::ModuleTag tag : nn::kAllModules) {
    const auto& w = want.Get(tag).values;
    const auto& g = got.Get(tag).values;
    for (std::size_t j = 0; j < w.size(); ++j) {
      EXPECT_LE(std::abs(g[j] - w[j]), 1e-10 * std::max(std::abs(w[j]), 1.0));
    }
  }
  EXPECT_TRUE(MetaUpdateEquivalent(c.theta0, c.gradients, c.meta_rate, got));
}

TEST(CoordinatorTest, EquivalenceCheckNoticesWrongState) {
  const oracles::MetaCase& c = Case();
  nn::ModelBundle state = ApplyClosedForm(c.theta0, c.gradients, c.meta_rate);
  state.credit.values[0] += 1e-6;
  EXPECT_FALSE(MetaUpdateEquivalent(c.theta0, c.gradients, c.meta_rate, state));
}

TEST(CoordinatorTest, ConcurrentSubmissionsAllApplied) {
  const oracles::MetaCase& c = Case();
  Coordinator coord(c.theta0, c.meta_rate);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < c.gradients.size(); ++i) {
    threads.emplace_back(
        [&, i] { coord.Submit(c.submitters[i], c.gradients[i]); });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(coord.updates(), static_cast<long>(c.gradients.size()));
  EXPECT_TRUE(MetaUpdateEquivalent(c.theta0, c.gradients, c.meta_rate,
                                   coord.Snapshot()));
}

TEST(CoordinatorTest, OracleSuiteCase) {
  const oracles::CheckResult r = oracles::CheckMetaEquivalence(2, 2, 3);
  EXPECT_TRUE(r.passed) << r.detail;
}

scenarios::ScenarioConfig TinyTraining(int epochs) {
  scenarios::ScenarioConfig c = scenarios::TrainPreset();
  c.population = {{"moody", 2}};
  c.window = 300;
  c.architecture.stack_depth = 2;
  c.architecture.hidden = 6;
  c.architecture.price_levels = 4;
  c.architecture.curiosity_hidden = 5;
  c.architecture.credit_hidden = 4;
  c.architecture.credit_attention = 3;
  c.architecture.credit_segments = 3;
  c.training.epochs = epochs;
  c.training.tau = 2;
  return c;
}

TEST(OfflineTrainingTest, ZeroEpochsReturnsInitialModel) {
  const scenarios::ScenarioConfig c = TinyTraining(0);
  const TrainingResult r = RunOfflineTraining(c, 4, BidderKind::kMoody);
  const nn::Networks nets(c.architecture);
  sim::Rng init = sim::RngStreams(4).Get(sim::Stream::kLearningInit, 0);
  EXPECT_TRUE(nn::BundlesEqual(r.model, nn::InitModel(nets, init)));
  EXPECT_EQ(r.epochs_completed, 0);
  EXPECT_TRUE(r.rows.empty());
}

TEST(OfflineTrainingTest, RowsPerAgentAndShot) {
  const scenarios::ScenarioConfig c = TinyTraining(2);
  const TrainingResult r = RunOfflineTraining(c, 4, BidderKind::kMoody);
  EXPECT_FALSE(r.halted) << r.diagnostic;
  EXPECT_EQ(r.epochs_completed, 2);
  EXPECT_EQ(r.trained_steps, 2 * 2 * 300);
  EXPECT_EQ(r.rows.size(), 2u * 2u * 2u);
  EXPECT_GT(r.meta_updates, 0);
}

TEST(OfflineTrainingTest, Deterministic) {
  const scenarios::ScenarioConfig c = TinyTraining(2);
  const TrainingResult a = RunOfflineTraining(c, 9, BidderKind::kMoody);
  const TrainingResult b = RunOfflineTraining(c, 9, BidderKind::kMoody);
  EXPECT_TRUE(nn::BundlesEqual(a.model, b.model));
  const TrainingResult other = RunOfflineTraining(c, 10, BidderKind::kMoody);
  EXPECT_FALSE(nn::BundlesEqual(a.model, other.model));
}

TEST(OfflineTrainingTest, ActorCriticLogsNoModuleLosses) {
  const TrainingResult r =
      RunOfflineTraining(TinyTraining(1), 4, BidderKind::kActorCritic);
  ASSERT_FALSE(r.rows.empty());
  for (const TrainingRow& row : r.rows) {
    EXPECT_FALSE(row.credit_loss.has_value());
    EXPECT_FALSE(row.forward_loss.has_value());
  }
}

TEST(OfflineTrainingTest, DracoRunsSameNumberOfSteps) {
  const TrainingResult r =
      RunOfflineTraining(TinyTraining(2), 4, BidderKind::kDraco2Like);
  EXPECT_FALSE(r.halted);
  EXPECT_EQ(r.trained_steps, 2 * 2 * 300);
  EXPECT_EQ(r.meta_updates, 0);
}

TEST(OfflineTrainingTest, LossCeilingHalts) {
  scenarios::ScenarioConfig c = TinyTraining(3);
  c.training.loss_ceiling = 1e-12;
  const TrainingResult r = RunOfflineTraining(c, 4, BidderKind::kMoody);
  EXPECT_TRUE(r.halted);
  EXPECT_FALSE(r.diagnostic.empty());
  EXPECT_LT(r.epochs_completed, 3);
}

TEST(OfflineTrainingTest, CheckpointRoundTrip) {
  const scenarios::ScenarioConfig c = TinyTraining(1);
  const TrainingResult r = RunOfflineTraining(c, 4, BidderKind::kMoody);
  const std::string path =
      (std::filesystem::temp_directory_path() / "meta_test_ckpt.json").string();
  nn::SaveCheckpoint(r.model, path,
                     CheckpointMetadata(r, BidderKind::kMoody, 4));
  const nn::Networks nets(c.architecture);
  std::map<std::string, std::string> meta;
  const nn::ModelBundle back = nn::LoadCheckpoint(path, nets, &meta);
  EXPECT_TRUE(nn::BundlesEqual(back, r.model));
  EXPECT_EQ(meta.at("algo"), "moody");
  EXPECT_EQ(meta.at("halted"), "false");
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace edgemarket::meta
