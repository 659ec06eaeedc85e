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

// Command-line front end: train, test, mix, sensitivity, oracle.
//
// Exit codes: 0 success, 1 configuration or input error, 2 oracle failure.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "edgemarket/baselines/factory.h"
#include "edgemarket/meta/training.h"
#include "edgemarket/nn/model.h"
#include "edgemarket/oracles/suite.h"
#include "edgemarket/scenarios/config.h"
#include "edgemarket/scenarios/experiments.h"
#include "edgemarket/scenarios/metrics.h"
#include "edgemarket/scenarios/report.h"
#include "json.hpp"

namespace fs = std::filesystem;
using edgemarket::scenarios::ConfigError;
using edgemarket::scenarios::ScenarioConfig;

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitOracle = 2;

struct CommonFlags {
  std::string config;
  std::string preset;
  std::string seed;
  std::string seeds;
  std::string out;
  std::string checkpoint;
  std::string algo;
  bool audit_log = false;
  int epochs = -1;
};

ScenarioConfig LoadScenario(const CommonFlags& f,
                            const std::string& default_preset) {
  ScenarioConfig c;
  if (!f.config.empty()) {
    c = edgemarket::scenarios::LoadConfig(f.config);
  } else {
    const std::string preset = f.preset.empty() ? default_preset : f.preset;
    c = edgemarket::scenarios::ParseConfig(
        nlohmann::json{{"preset", preset}}.dump());
  }
  if (!f.out.empty()) c.output_dir = f.out;
  if (f.epochs >= 0) c.training.epochs = f.epochs;
  if (!f.seeds.empty()) c.seeds = edgemarket::scenarios::ParseSeedList(f.seeds);
  if (!f.seed.empty()) c.seeds = edgemarket::scenarios::ParseSeedList(f.seed);
  edgemarket::scenarios::ValidateConfig(c);
  return c;
}

std::string Join(const std::vector<std::uint64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string PopulationText(const ScenarioConfig& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.population.size(); ++i) {
    os << (i ? "+" : "") << c.population[i].count << "x"
       << c.population[i].algo;
  }
  return os.str();
}

std::map<std::string, std::string> RunNotes(const ScenarioConfig& c) {
  return {{"preset", c.preset},
          {"horizon_steps", std::to_string(c.horizon)},
          {"window_steps", std::to_string(c.window)},
          {"seeds", Join(c.seeds)},
          {"population", PopulationText(c)},
          {"total_capacity", std::to_string(c.total_capacity())}};
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

// Pure population of `algo` with the configured bidder count.
void ForcePopulation(ScenarioConfig& c, const std::string& algo) {
  edgemarket::baselines::ParseBidderKind(algo);
  c.population = {{algo, c.num_bidders()}};
}

int Train(const CommonFlags& f) {
  ScenarioConfig c = LoadScenario(f, "train");
  std::vector<std::string> algos;
  if (f.algo.empty() || f.algo == "all") {
    algos = {"moody", "ac", "draco2-like"};
  } else {
    algos = {f.algo};
  }
  const std::uint64_t seed = c.seeds.front();
  fs::create_directories(c.output_dir);
  fs::path config_copy = fs::path(c.output_dir) / "train_config.json";
  WriteText(config_copy, edgemarket::scenarios::ConfigToJson(c));
  for (const std::string& algo : algos) {
    const auto kind = edgemarket::baselines::ParseBidderKind(algo);
    if (!edgemarket::baselines::IsLearner(kind)) {
      throw ConfigError("'" + algo + "' does not train");
    }
    ScenarioConfig run = c;
    ForcePopulation(run, algo);
    const auto result = edgemarket::meta::RunOfflineTraining(run, seed, kind);
    const fs::path dir(c.output_dir);
    edgemarket::meta::WriteTrainingCsv(result.rows,
                                       (dir / ("training_" + algo + ".csv")).string());
    edgemarket::nn::SaveCheckpoint(
        result.model, (dir / (algo + ".json")).string(),
        edgemarket::meta::CheckpointMetadata(result, kind, seed));
    std::cout << algo << ": " << result.epochs_completed << " epochs, "
              << result.trained_steps << " steps, " << result.meta_updates
              << " meta updates\n";
    if (result.halted) {
      std::cerr << algo << ": " << result.diagnostic << "\n";
      return kExitConfig;
    }
  }
  return 0;
}

edgemarket::scenarios::ModelSet Models(const ScenarioConfig& c,
                                       const CommonFlags& f) {
  if (f.checkpoint.empty()) {
    for (const auto& g : c.population) {
      if (edgemarket::baselines::IsLearner(
              edgemarket::baselines::ParseBidderKind(g.algo))) {
        throw ConfigError("--checkpoint is required for learning bidders");
      }
    }
    return {};
  }
  return edgemarket::scenarios::LoadModels(c, f.checkpoint);
}

// Runs every seed into <dir>/seed_<s>/ and returns the report.
edgemarket::scenarios::RunReport RunSeeds(
    const ScenarioConfig& c, const edgemarket::scenarios::ModelSet& models,
    const fs::path& dir, bool audit_log,
    std::vector<std::vector<edgemarket::scenarios::MetricRow>>* all_rows =
        nullptr) {
  std::vector<edgemarket::scenarios::SeedSummary> summaries;
  for (std::uint64_t seed : c.seeds) {
    const fs::path seed_dir = dir / ("seed_" + std::to_string(seed));
    fs::create_directories(seed_dir);
    edgemarket::scenarios::SimulationOptions options;
    if (audit_log) options.audit_log_path = (seed_dir / "audit.csv").string();
    const auto result =
        edgemarket::scenarios::RunScenario(c, seed, models, options);
    edgemarket::scenarios::WriteMetricsCsv(
        result.rows, (seed_dir / "metrics.csv").string());
    summaries.push_back(edgemarket::scenarios::SummarizeMetrics(result.rows, seed));
    if (all_rows) all_rows->push_back(result.rows);
    if (!result.audits.clean()) {
      std::cerr << "seed " << seed << ": audit violations (capacity "
                << result.audits.capacity_violations << ", future reads "
                << result.audits.future_reads << ", budget "
                << result.audits.budget_violations << ")\n";
    }
  }
  return edgemarket::scenarios::BuildReport(std::move(summaries));
}

int Test(const CommonFlags& f) {
  ScenarioConfig c = LoadScenario(f, "test");
  if (!f.algo.empty()) ForcePopulation(c, f.algo);
  const auto models = Models(c, f);
  const fs::path dir(c.output_dir);
  fs::create_directories(dir);
  const auto report = RunSeeds(c, models, dir, f.audit_log);
  WriteText(dir / "report.json",
            edgemarket::scenarios::ReportToJson(report, RunNotes(c)));
  for (const char* key : {"ofr", "fairness", "utility", "beta"}) {
    const auto& e = report.aggregate.at(key);
    std::cout << key << " " << e.mean << " +/- " << e.half_width << "\n";
  }
  return 0;
}

int Mix(const CommonFlags& f, const std::string& with,
        std::vector<int> counts) {
  ScenarioConfig c = LoadScenario(f, "test");
  const std::string baseline = f.algo.empty() ? "draco2-like" : f.algo;
  edgemarket::baselines::ParseBidderKind(baseline);
  edgemarket::baselines::ParseBidderKind(with);
  const int total = c.num_bidders();
  if (counts.empty()) {
    for (int k = 0; k < total; ++k) counts.push_back(k);
  }
  const fs::path dir(c.output_dir);
  fs::create_directories(dir);
  std::ofstream csv(dir / "mix.csv", std::ios::binary | std::ios::trunc);
  if (!csv) throw std::runtime_error("cannot write mix.csv");
  csv << "mix_count,seed,bidder,algo,ofr,resolved\n";
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  for (int k : counts) {
    ScenarioConfig run = c;
    run.population =
        edgemarket::scenarios::MixPopulation(with, k, baseline, total);
    const auto models = Models(run, f);
    std::vector<std::vector<edgemarket::scenarios::MetricRow>> rows;
    const auto report = RunSeeds(
        run, models, dir / (with + "_" + std::to_string(k)), f.audit_log,
        &rows);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (const auto& b : edgemarket::scenarios::PerBidderOfr(rows[i])) {
        csv << k << ',' << run.seeds[i] << ',' << b.bidder << ',' << b.algo
            << ',' << edgemarket::scenarios::FormatValue(b.ofr) << ','
            << b.resolved << '\n';
      }
    }
    nlohmann::ordered_json cell = nlohmann::ordered_json::object();
    for (const auto& [key, e] : report.aggregate) {
      if (key.rfind("ofr/", 0) == 0 || key.rfind("fairness", 0) == 0) {
        cell[key] = {{"mean", e.mean}, {"ci95", e.half_width}, {"n", e.n}};
      }
    }
    summary[std::to_string(k)] = cell;
    std::cout << with << "=" << k << " done\n";
  }
  WriteText(dir / "mix_report.json", summary.dump(2) + "\n");
  return 0;
}

std::vector<double> ParseList(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty()) {
      throw ConfigError("bad number '" + item + "' in list '" + text + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("empty list");
  return out;
}

int Sensitivity(const CommonFlags& f, const std::string& v_scales,
                const std::string& q_scales,
                const std::vector<std::string>& preferences) {
  ScenarioConfig c = LoadScenario(f, "test");
  if (!f.algo.empty()) ForcePopulation(c, f.algo);
  const auto models = Models(c, f);
  std::vector<std::optional<edgemarket::rewards::PreferenceVector>> prefs;
  std::vector<std::string> pref_names;
  if (preferences.empty()) {
    prefs.push_back(std::nullopt);
    pref_names.push_back("resampled");
  }
  for (const std::string& p : preferences) {
    const std::vector<double> u = ParseList(p);
    if (u.size() != 3) throw ConfigError("--preference takes u1,u2,u3");
    for (double x : u) {
      if (!(x >= 0.0 && x <= 1.0)) throw ConfigError("preference outside [0,1]");
    }
    prefs.push_back(edgemarket::rewards::PreferenceVector::FromDraws(u[0], u[1], u[2]));
    std::string name = p;
    for (char& ch : name) {
      if (ch == ',') ch = '/';
    }
    pref_names.push_back(name);
  }
  const fs::path dir(c.output_dir);
  fs::create_directories(dir);
  std::ofstream csv(dir / "sensitivity.csv", std::ios::binary | std::ios::trunc);
  if (!csv) throw std::runtime_error("cannot write sensitivity.csv");
  csv << "v_scale,q_scale,preference,seed,utility,ofr,fairness,beta\n";
  for (double vs : ParseList(v_scales)) {
    for (double qs : ParseList(q_scales)) {
      for (std::size_t p = 0; p < prefs.size(); ++p) {
        ScenarioConfig run = c;
        run.valuation.valuation_scale = vs;
        run.valuation.backoff_cost_scale = qs;
        run.fixed_preference = prefs[p];
        edgemarket::scenarios::ValidateConfig(run);
        for (std::uint64_t seed : run.seeds) {
          const auto result =
              edgemarket::scenarios::RunScenario(run, seed, models);
          const auto s =
              edgemarket::scenarios::SummarizeMetrics(result.rows, seed);
          using edgemarket::scenarios::FormatValue;
          csv << FormatValue(vs) << ',' << FormatValue(qs) << ','
              << pref_names[p] << ',' << seed << ','
              << FormatValue(s.values.at("utility")) << ','
              << FormatValue(s.values.at("ofr")) << ','
              << FormatValue(s.values.at("fairness")) << ','
              << FormatValue(s.values.at("beta")) << '\n';
        }
        std::cout << "cell v=" << vs << " q=" << qs << " pref="
                  << pref_names[p] << " done\n";
      }
    }
  }
  return 0;
}

int Oracle(const CommonFlags& f, const std::string& inject) {
  edgemarket::oracles::SuiteOptions options;
  if (!f.seed.empty()) {
    options.seed = edgemarket::scenarios::ParseSeedList(f.seed).front();
  }
  options.inject = inject;
  const auto results = edgemarket::oracles::RunOracleSuite(options);
  nlohmann::ordered_json report = nlohmann::ordered_json::array();
  bool ok = true;
  for (const auto& r : results) {
    report.push_back({{"check", r.name},
                      {"passed", r.passed},
                      {"seconds", r.seconds},
                      {"detail", r.detail}});
    ok = ok && r.passed;
  }
  const std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!f.out.empty()) {
    fs::create_directories(f.out);
    WriteText(fs::path(f.out) / "oracle.json", text);
  }
  return ok ? 0 : kExitOracle;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge computing marketplace simulator and bidder training"};
  app.require_subcommand(1);
  CommonFlags flags;
  auto add_common = [&flags](CLI::App* cmd) {
    cmd->add_option("--config", flags.config, "Scenario JSON file");
    cmd->add_option("--preset", flags.preset, "train or test (without --config)");
    cmd->add_option("--seed", flags.seed, "Master seed");
    cmd->add_option("--seeds", flags.seeds, "Seed list: A..B or A,B,C");
    cmd->add_option("--out", flags.out, "Output directory");
  };

  CLI::App* train = app.add_subcommand("train", "Offline training");
  add_common(train);
  train->add_option("--algo", flags.algo, "moody, ac, draco2-like or all");
  train->add_option("--epochs", flags.epochs, "Outer-loop epochs");

  CLI::App* test = app.add_subcommand("test", "Online test runs");
  add_common(test);
  test->add_option("--checkpoint", flags.checkpoint,
                   "Checkpoint file or directory of <algo>.json");
  test->add_option("--algo", flags.algo, "Run a pure population of this kind");
  test->add_flag("--audit-log", flags.audit_log, "Write per-auction audit CSV");

  std::string mix_with = "moody";
  std::vector<int> mix_counts;
  CLI::App* mix = app.add_subcommand("mix", "Heterogeneous populations");
  add_common(mix);
  mix->add_option("--checkpoint", flags.checkpoint,
                  "Directory of <algo>.json checkpoints");
  mix->add_option("--algo", flags.algo, "Baseline kind (default draco2-like)");
  mix->add_option("--with", mix_with, "Kind mixed in (default moody)");
  mix->add_option("--counts", mix_counts,
                  "Numbers of mixed-in bidders (default 0..N-1)")
      ->delimiter(',');
  mix->add_flag("--audit-log", flags.audit_log, "Write per-auction audit CSV");

  std::string v_scales = "1";
  std::string q_scales = "1";
  std::vector<std::string> preferences;
  CLI::App* sens = app.add_subcommand("sensitivity", "Hyperparameter grid");
  add_common(sens);
  sens->add_option("--checkpoint", flags.checkpoint,
                   "Checkpoint file or directory of <algo>.json");
  sens->add_option("--algo", flags.algo, "Run a pure population of this kind");
  sens->add_option("--v-scale", v_scales, "Valuation multipliers, e.g. 0.5,1,2");
  sens->add_option("--q-scale", q_scales, "Backoff cost multipliers");
  sens->add_option("--preference", preferences,
                   "Fixed preference draws u1,u2,u3 (repeatable)");

  std::string inject;
  CLI::App* oracle = app.add_subcommand("oracle", "Reference-oracle suite");
  oracle->add_option("--seed", flags.seed, "Seed for random instances");
  oracle->add_option("--out", flags.out, "Directory for oracle.json");
  oracle->add_option("--config", flags.config, "Accepted and ignored");
  oracle->add_option("--inject", inject, "payment-rule or gradient")
      ->check(CLI::IsMember({"payment-rule", "gradient"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*train) return Train(flags);
    if (*test) return Test(flags);
    if (*mix) return Mix(flags, mix_with, mix_counts);
    if (*sens) return Sensitivity(flags, v_scales, q_scales, preferences);
    if (*oracle) return Oracle(flags, inject);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return 0;
}
