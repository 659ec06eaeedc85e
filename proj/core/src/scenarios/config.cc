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

#include "edgemarket/scenarios/config.h"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace edgemarket::scenarios {
namespace {

using nlohmann::json;

void RejectUnknown(const json& j, const std::set<std::string>& known,
                   const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!known.count(it.key())) {
      throw ConfigError("unknown key '" + it.key() + "' in " + where);
    }
  }
}

template <typename T>
void Read(const json& j, const char* key, T& out, const std::string& where) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(where + "." + key + ": " + e.what());
  }
}

void ReadObject(const json& j, const char* key, const std::string& where) {
  if (j.contains(key) && !j.at(key).is_object()) {
    throw ConfigError(where + "." + key + " must be an object");
  }
}

json TypeToJson(const market::CommodityType& t) {
  return {{"name", t.name},
          {"resource_units", t.resource_units},
          {"deadline_window", t.deadline_window},
          {"uplink_mbit", t.uplink_mbit},
          {"downlink_mbit", t.downlink_mbit},
          {"arrival_period", t.arrival_period}};
}

market::CommodityType TypeFromJson(const json& j, int id) {
  const std::string where = "types[" + std::to_string(id) + "]";
  RejectUnknown(j, {"name", "resource_units", "deadline_window", "uplink_mbit",
                    "downlink_mbit", "arrival_period"},
                where);
  market::CommodityType t;
  t.id = id;
  t.name = "F" + std::to_string(id + 1);
  Read(j, "name", t.name, where);
  Read(j, "resource_units", t.resource_units, where);
  Read(j, "deadline_window", t.deadline_window, where);
  Read(j, "uplink_mbit", t.uplink_mbit, where);
  Read(j, "downlink_mbit", t.downlink_mbit, where);
  Read(j, "arrival_period", t.arrival_period, where);
  return t;
}

}  // namespace

int ScenarioConfig::num_bidders() const {
  int n = 0;
  for (const auto& g : population) n += g.count;
  return n;
}

double ScenarioConfig::total_capacity() const {
  double c = 0.0;
  for (const auto& s : sites) c += s.capacity;
  return c;
}

ScenarioConfig TrainPreset() {
  ScenarioConfig c;
  c.preset = "train";
  c.mobility = sim::TrainMobility();
  c.sites = {{30.0, 0, 1.0}, {30.0, 20, 1.0}};
  c.horizon = 60000;
  c.seeds = {1, 2, 3};
  // Training runs with a constant preference vector per inner loop.
  c.preference_resample_mean = 0.0;
  return c;
}

ScenarioConfig TestPreset() {
  ScenarioConfig c;
  c.preset = "test";
  c.mobility = sim::TestMobility();
  c.sites = {{5.0, 0, 1.0}, {5.0, 20, 1.0}};
  c.horizon = 100000;
  c.seeds = {1, 2, 3, 4, 5};
  return c;
}

ScenarioConfig ParseConfig(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  RejectUnknown(j,
                {"preset", "horizon_steps", "seeds", "types", "sites",
                 "capacity", "slot_rate", "work_jitter", "population",
                 "mobility", "mobility_warmup_s", "radio",
                 "preference_resample_mean", "fixed_preference", "window", "feedback_delay",
                 "max_rebids", "initial_wealth", "valuation", "architecture",
                 "learning", "fsp", "monitor_size", "retrain_shots",
                 "draco_retrain_steps", "training", "output_dir"},
                "config");
  const std::string preset = j.value("preset", "test");
  ScenarioConfig c;
  if (preset == "train") {
    c = TrainPreset();
  } else if (preset == "test" || preset == "custom") {
    c = TestPreset();
    c.preset = preset;
  } else {
    throw ConfigError("preset must be train, test or custom");
  }
  const std::string w = "config";
  Read(j, "horizon_steps", c.horizon, w);
  Read(j, "seeds", c.seeds, w);
  if (j.contains("types")) {
    c.types.clear();
    int id = 0;
    for (const json& t : j.at("types")) c.types.push_back(TypeFromJson(t, id++));
  }
  if (j.contains("sites")) {
    c.sites.clear();
    for (const json& s : j.at("sites")) {
      RejectUnknown(s, {"capacity", "link_delay", "base_price"}, "sites[]");
      SiteConfig site;
      Read(s, "capacity", site.capacity, "sites[]");
      Read(s, "link_delay", site.link_delay, "sites[]");
      Read(s, "base_price", site.base_price, "sites[]");
      c.sites.push_back(site);
    }
  }
  if (j.contains("capacity")) {
    double cap = 0.0;
    Read(j, "capacity", cap, w);
    // Total capacity, split evenly across the sites.
    for (auto& s : c.sites) s.capacity = cap / c.sites.size();
  }
  Read(j, "slot_rate", c.slot_rate, w);
  Read(j, "work_jitter", c.work_jitter, w);
  if (j.contains("population")) {
    c.population.clear();
    const json& p = j.at("population");
    if (p.is_object()) {
      for (auto it = p.begin(); it != p.end(); ++it) {
        c.population.push_back({it.key(), it.value().get<int>()});
      }
    } else {
      for (const json& g : p) {
        RejectUnknown(g, {"algo", "count"}, "population[]");
        c.population.push_back(
            {g.at("algo").get<std::string>(), g.at("count").get<int>()});
      }
    }
  }
  ReadObject(j, "mobility", w);
  if (j.contains("mobility")) {
    const json& m = j.at("mobility");
    RejectUnknown(m, {"arrival_rate_per_s", "speed_kmh", "speed_jitter",
                      "radius_m", "stop_line_m", "green_s", "red_s"},
                  "mobility");
    Read(m, "arrival_rate_per_s", c.mobility.arrival_rate_per_s, "mobility");
    Read(m, "speed_kmh", c.mobility.speed_kmh, "mobility");
    Read(m, "speed_jitter", c.mobility.speed_jitter, "mobility");
    Read(m, "radius_m", c.mobility.radius_m, "mobility");
    Read(m, "stop_line_m", c.mobility.stop_line_m, "mobility");
    Read(m, "green_s", c.mobility.green_s, "mobility");
    Read(m, "red_s", c.mobility.red_s, "mobility");
  }
  Read(j, "mobility_warmup_s", c.mobility_warmup_s, w);
  ReadObject(j, "radio", w);
  if (j.contains("radio")) {
    const json& r = j.at("radio");
    RejectUnknown(r, {"radius_m", "slope_mbps_per_m", "intercept_mbps",
                      "floor_mbps"},
                  "radio");
    Read(r, "radius_m", c.radio.radius_m, "radio");
    Read(r, "slope_mbps_per_m", c.radio.slope_mbps_per_m, "radio");
    Read(r, "intercept_mbps", c.radio.intercept_mbps, "radio");
    Read(r, "floor_mbps", c.radio.floor_mbps, "radio");
  }
  Read(j, "preference_resample_mean", c.preference_resample_mean, w);
  if (j.contains("fixed_preference")) {
    std::vector<double> u;
    Read(j, "fixed_preference", u, w);
    if (u.size() != 3) {
      throw ConfigError("fixed_preference needs three weights in [0, 1]");
    }
    c.fixed_preference = rewards::PreferenceVector::FromDraws(u[0], u[1], u[2]);
  }
  Read(j, "window", c.window, w);
  Read(j, "feedback_delay", c.feedback_delay, w);
  Read(j, "max_rebids", c.max_rebids, w);
  Read(j, "initial_wealth", c.initial_wealth, w);
  ReadObject(j, "valuation", w);
  if (j.contains("valuation")) {
    const json& v = j.at("valuation");
    RejectUnknown(v, {"kappa_min", "kappa_max", "valuation_scale",
                      "backoff_cost_scale"},
                  "valuation");
    Read(v, "kappa_min", c.valuation.kappa_min, "valuation");
    Read(v, "kappa_max", c.valuation.kappa_max, "valuation");
    Read(v, "valuation_scale", c.valuation.valuation_scale, "valuation");
    Read(v, "backoff_cost_scale", c.valuation.backoff_cost_scale, "valuation");
  }
  ReadObject(j, "architecture", w);
  if (j.contains("architecture")) {
    const json& a = j.at("architecture");
    RejectUnknown(a, {"stack_depth", "hidden", "price_levels",
                      "curiosity_hidden", "credit_hidden", "credit_attention",
                      "credit_segments"},
                  "architecture");
    Read(a, "stack_depth", c.architecture.stack_depth, "architecture");
    Read(a, "hidden", c.architecture.hidden, "architecture");
    Read(a, "price_levels", c.architecture.price_levels, "architecture");
    Read(a, "curiosity_hidden", c.architecture.curiosity_hidden,
         "architecture");
    Read(a, "credit_hidden", c.architecture.credit_hidden, "architecture");
    Read(a, "credit_attention", c.architecture.credit_attention,
         "architecture");
    Read(a, "credit_segments", c.architecture.credit_segments, "architecture");
  }
  ReadObject(j, "learning", w);
  if (j.contains("learning")) {
    const json& l = j.at("learning");
    RejectUnknown(l, {"gamma", "actor_rate", "critic_weight",
                      "supervised_rate", "curiosity_rate", "credit_rate"},
                  "learning");
    Read(l, "gamma", c.learning.gamma, "learning");
    Read(l, "actor_rate", c.learning.actor_rate, "learning");
    Read(l, "critic_weight", c.learning.critic_weight, "learning");
    Read(l, "supervised_rate", c.learning.supervised_rate, "learning");
    Read(l, "curiosity_rate", c.learning.curiosity_rate, "learning");
    Read(l, "credit_rate", c.learning.credit_rate, "learning");
  }
  ReadObject(j, "fsp", w);
  if (j.contains("fsp")) {
    const json& f = j.at("fsp");
    RejectUnknown(f, {"eta0", "horizon", "fixed"}, "fsp");
    Read(f, "eta0", c.fsp.eta0, "fsp");
    Read(f, "horizon", c.fsp.horizon, "fsp");
    Read(f, "fixed", c.fsp.fixed, "fsp");
  }
  Read(j, "monitor_size", c.monitor_size, w);
  Read(j, "retrain_shots", c.retrain_shots, w);
  Read(j, "draco_retrain_steps", c.draco_retrain_steps, w);
  ReadObject(j, "training", w);
  if (j.contains("training")) {
    const json& t = j.at("training");
    RejectUnknown(t, {"epochs", "tau", "meta_rate", "loss_ceiling"},
                  "training");
    Read(t, "epochs", c.training.epochs, "training");
    Read(t, "tau", c.training.tau, "training");
    Read(t, "meta_rate", c.training.meta_rate, "training");
    Read(t, "loss_ceiling", c.training.loss_ceiling, "training");
  }
  Read(j, "output_dir", c.output_dir, w);
  c.architecture.num_types = static_cast<int>(c.types.size());
  ValidateConfig(c);
  return c;
}

ScenarioConfig LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseConfig(ss.str());
}

std::string ConfigToJson(const ScenarioConfig& c) {
  json j;
  j["preset"] = c.preset;
  j["horizon_steps"] = c.horizon;
  j["seeds"] = c.seeds;
  j["types"] = json::array();
  for (const auto& t : c.types) j["types"].push_back(TypeToJson(t));
  j["sites"] = json::array();
  for (const auto& s : c.sites) {
    j["sites"].push_back({{"capacity", s.capacity},
                          {"link_delay", s.link_delay},
                          {"base_price", s.base_price}});
  }
  j["slot_rate"] = c.slot_rate;
  j["work_jitter"] = c.work_jitter;
  j["population"] = json::array();
  for (const auto& g : c.population) {
    j["population"].push_back({{"algo", g.algo}, {"count", g.count}});
  }
  j["mobility"] = {{"arrival_rate_per_s", c.mobility.arrival_rate_per_s},
                   {"speed_kmh", c.mobility.speed_kmh},
                   {"speed_jitter", c.mobility.speed_jitter},
                   {"radius_m", c.mobility.radius_m},
                   {"stop_line_m", c.mobility.stop_line_m},
                   {"green_s", c.mobility.green_s},
                   {"red_s", c.mobility.red_s}};
  j["mobility_warmup_s"] = c.mobility_warmup_s;
  j["radio"] = {{"radius_m", c.radio.radius_m},
                {"slope_mbps_per_m", c.radio.slope_mbps_per_m},
                {"intercept_mbps", c.radio.intercept_mbps},
                {"floor_mbps", c.radio.floor_mbps}};
  j["preference_resample_mean"] = c.preference_resample_mean;
  if (c.fixed_preference) {
    j["fixed_preference"] = {c.fixed_preference->utility,
                             c.fixed_preference->failure,
                             c.fixed_preference->loss_cost};
  }
  j["window"] = c.window;
  j["feedback_delay"] = c.feedback_delay;
  j["max_rebids"] = c.max_rebids;
  j["initial_wealth"] = c.initial_wealth;
  j["valuation"] = {{"kappa_min", c.valuation.kappa_min},
                    {"kappa_max", c.valuation.kappa_max},
                    {"valuation_scale", c.valuation.valuation_scale},
                    {"backoff_cost_scale", c.valuation.backoff_cost_scale}};
  j["architecture"] = {{"stack_depth", c.architecture.stack_depth},
                       {"hidden", c.architecture.hidden},
                       {"price_levels", c.architecture.price_levels},
                       {"curiosity_hidden", c.architecture.curiosity_hidden},
                       {"credit_hidden", c.architecture.credit_hidden},
                       {"credit_attention", c.architecture.credit_attention},
                       {"credit_segments", c.architecture.credit_segments}};
  j["learning"] = {{"gamma", c.learning.gamma},
                   {"actor_rate", c.learning.actor_rate},
                   {"critic_weight", c.learning.critic_weight},
                   {"supervised_rate", c.learning.supervised_rate},
                   {"curiosity_rate", c.learning.curiosity_rate},
                   {"credit_rate", c.learning.credit_rate}};
  j["fsp"] = {{"eta0", c.fsp.eta0},
              {"horizon", c.fsp.horizon},
              {"fixed", c.fsp.fixed}};
  j["monitor_size"] = c.monitor_size;
  j["retrain_shots"] = c.retrain_shots;
  j["draco_retrain_steps"] = c.draco_retrain_steps;
  j["training"] = {{"epochs", c.training.epochs},
                   {"tau", c.training.tau},
                   {"meta_rate", c.training.meta_rate},
                   {"loss_ceiling", c.training.loss_ceiling}};
  j["output_dir"] = c.output_dir;
  return j.dump(2);
}

void ValidateConfig(const ScenarioConfig& c) {
  auto fail = [](const std::string& m) { throw ConfigError(m); };
  if (c.horizon < 0) fail("horizon_steps must be >= 0");
  if (c.types.empty()) fail("at least one service type is required");
  for (const auto& t : c.types) {
    try {
      market::ValidateCommodityType(t);
    } catch (const std::invalid_argument& e) {
      fail(std::string("types: ") + e.what());
    }
  }
  if (c.sites.empty()) fail("at least one computing site is required");
  for (const auto& s : c.sites) {
    if (s.capacity < 0 || s.link_delay < 0) fail("sites: negative value");
  }
  if (!(c.slot_rate > 0)) fail("slot_rate must be positive");
  if (c.work_jitter < 0) fail("work_jitter must be >= 0");
  if (c.num_bidders() <= 0) fail("population must contain bidders");
  for (const auto& g : c.population) {
    if (g.count < 0) fail("population counts must be >= 0");
    if (g.algo != "moody" && g.algo != "ac" && g.algo != "draco2-like" &&
        g.algo != "random") {
      fail("unknown algorithm kind '" + g.algo + "'");
    }
  }
  if (c.window <= 0) fail("window must be positive");
  if (c.fixed_preference && !c.fixed_preference->SatisfiesSimplex(1e-12)) {
    fail("fixed_preference weights must lie in [0, 1]");
  }
  if (c.architecture.credit_segments <= 0 ||
      c.window % c.architecture.credit_segments != 0) {
    fail("window must be a multiple of architecture.credit_segments");
  }
  if (c.feedback_delay < 0) fail("feedback_delay must be >= 0");
  if (c.max_rebids < 0) fail("max_rebids must be >= 0");
  if (!(c.initial_wealth > 0)) fail("initial_wealth must be positive");
  if (c.architecture.price_levels < 2) fail("price_levels must be >= 2");
  if (c.architecture.stack_depth < 1) fail("stack_depth must be >= 1");
  if (c.training.epochs < 0 || c.training.tau < 0) {
    fail("training.epochs and training.tau must be >= 0");
  }
  if (c.monitor_size < 1 || c.retrain_shots < 1) {
    fail("monitor_size and retrain_shots must be >= 1");
  }
  if (c.valuation.kappa_min <= 0 || c.valuation.kappa_max < c.valuation.kappa_min) {
    fail("valuation kappa range invalid");
  }
}

std::vector<std::uint64_t> ParseSeedList(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  try {
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
      const std::uint64_t a = std::stoull(text.substr(0, dots));
      const std::uint64_t b = std::stoull(text.substr(dots + 2));
      if (b < a) throw ConfigError("seed range is empty: " + text);
      for (std::uint64_t s = a; s <= b; ++s) seeds.push_back(s);
      return seeds;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) seeds.push_back(std::stoull(item));
  } catch (const std::logic_error&) {
    throw ConfigError("cannot parse seed list '" + text + "'");
  }
  if (seeds.empty()) throw ConfigError("empty seed list");
  return seeds;
}

}  // namespace edgemarket::scenarios
