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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"

namespace {

namespace fs = std::filesystem;

constexpr char kArchitecture[] = R"("architecture": {
    "stack_depth": 2, "hidden": 6, "price_levels": 4, "curiosity_hidden": 5,
    "credit_hidden": 4, "credit_attention": 3, "credit_segments": 4})";

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("edgemarket_cli_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int Run(const std::string& args) {
    const std::string cmd = std::string(EDGEMARKET_CLI) + " " + args + " > " +
                            (dir_ / "stdout.txt").string() + " 2> " +
                            (dir_ / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  fs::path Write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  static std::string Slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, OracleSuitePasses) {
  EXPECT_EQ(Run("oracle --out " + dir_.string()), 0);
  const std::string report = Slurp(dir_ / "oracle.json");
  EXPECT_NE(report.find("meta-equivalence"), std::string::npos);
  EXPECT_EQ(report.find("\"passed\": false"), std::string::npos);
}

TEST_F(CliTest, InjectedFaultsFailTheOracle) {
  EXPECT_EQ(Run("oracle --inject payment-rule"), 2);
  EXPECT_EQ(Run("oracle --inject gradient"), 2);
}

TEST_F(CliTest, ConfigErrorsExitOne) {
  EXPECT_EQ(Run("test --config /nonexistent.json"), 1);
  EXPECT_EQ(Run("test --config " + Write("bad.json", R"({"hoizon": 1})").string()),
            1);
  EXPECT_EQ(Run("test --preset test --seeds 1 --out " + dir_.string() +
                " --algo moody"),
            1);
  EXPECT_EQ(Run("frobnicate"), 1);
  EXPECT_EQ(Run(""), 1);
}

TEST_F(CliTest, TrainThenTest) {
  const fs::path train = Write("train.json", std::string(R"({
    "preset": "train", "seeds": [3], "window": 300,
    "population": {"moody": 2},
    "training": {"epochs": 1, "tau": 2},
    )") + kArchitecture + "}");
  const fs::path models = dir_ / "models";
  ASSERT_EQ(Run("train --config " + train.string() + " --out " +
                models.string()),
            0)
      << Slurp(dir_ / "stderr.txt");
  for (const char* f : {"moody.json", "ac.json", "draco2-like.json",
                        "training_moody.csv", "train_config.json"}) {
    EXPECT_TRUE(fs::exists(models / f)) << f;
  }

  const fs::path test = Write("test.json", std::string(R"({
    "preset": "test", "seeds": [1, 2], "horizon_steps": 6000,
    "population": {"moody": 2, "ac": 1, "random": 1},
    )") + kArchitecture + "}");
  const fs::path out = dir_ / "run";
  ASSERT_EQ(Run("test --config " + test.string() + " --checkpoint " +
                models.string() + " --out " + out.string() + " --audit-log"),
            0)
      << Slurp(dir_ / "stderr.txt");
  EXPECT_TRUE(fs::exists(out / "report.json"));
  EXPECT_TRUE(fs::exists(out / "seed_1" / "metrics.csv"));
  EXPECT_TRUE(fs::exists(out / "seed_2" / "audit.csv"));

  // Same seed, same bytes.
  const fs::path again = dir_ / "again";
  ASSERT_EQ(Run("test --config " + test.string() + " --checkpoint " +
                models.string() + " --out " + again.string()),
            0);
  EXPECT_EQ(Slurp(out / "seed_1" / "metrics.csv"),
            Slurp(again / "seed_1" / "metrics.csv"));
  EXPECT_NE(Slurp(out / "seed_1" / "metrics.csv"),
            Slurp(out / "seed_2" / "metrics.csv"));

  const fs::path mix = dir_ / "mix";
  ASSERT_EQ(Run("mix --config " + test.string() + " --checkpoint " +
                models.string() + " --seeds 1 --counts 0,2 --out " +
                mix.string()),
            0)
      << Slurp(dir_ / "stderr.txt");
  EXPECT_TRUE(fs::exists(mix / "mix.csv"));

  const fs::path sens = dir_ / "sens";
  ASSERT_EQ(Run("sensitivity --config " + test.string() + " --checkpoint " +
                models.string() + " --seeds 1 --v-scale 0.5,1 --q-scale 1 " +
                "--preference 1,0,0.5 --out " + sens.string()),
            0)
      << Slurp(dir_ / "stderr.txt");
  const std::string csv = Slurp(sens / "sensitivity.csv");
  EXPECT_EQ(csv.rfind("v_scale,q_scale,preference,seed", 0), 0u);
}

TEST_F(CliTest, RandomPopulationNeedsNoCheckpoint) {
  EXPECT_EQ(Run("test --preset test --seeds 4 --algo random --out " +
                dir_.string()),
            0)
      << Slurp(dir_ / "stderr.txt");
  EXPECT_TRUE(fs::exists(dir_ / "seed_4" / "metrics.csv"));
}

}  // namespace
