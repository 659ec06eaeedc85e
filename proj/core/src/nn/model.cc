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

#include "edgemarket/nn/model.h"

#include <fstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace edgemarket::nn {
namespace {

using nlohmann::json;

json ArchitectureToJson(const Architecture& a) {
  return json{{"num_types", a.num_types},
              {"stack_depth", a.stack_depth},
              {"hidden", a.hidden},
              {"price_levels", a.price_levels},
              {"curiosity_hidden", a.curiosity_hidden},
              {"credit_hidden", a.credit_hidden},
              {"credit_attention", a.credit_attention},
              {"credit_segments", a.credit_segments}};
}

Architecture ArchitectureFromJson(const json& j) {
  Architecture a;
  a.num_types = j.at("num_types").get<int>();
  a.stack_depth = j.at("stack_depth").get<int>();
  a.hidden = j.at("hidden").get<int>();
  a.price_levels = j.at("price_levels").get<int>();
  a.curiosity_hidden = j.at("curiosity_hidden").get<int>();
  a.credit_hidden = j.at("credit_hidden").get<int>();
  a.credit_attention = j.at("credit_attention").get<int>();
  a.credit_segments = j.at("credit_segments").get<int>();
  return a;
}

ParamVector ZerosFor(const Networks& nets, ModuleTag tag) {
  switch (tag) {
    case ModuleTag::kActorCritic:
      return nets.actor_critic.Zeros(tag);
    case ModuleTag::kSupervised:
      return nets.behavioral.Zeros(tag);
    case ModuleTag::kCuriosity:
      return nets.curiosity.Zeros();
    case ModuleTag::kCredit:
      return nets.credit.Zeros();
  }
  throw std::logic_error("unhandled module tag");
}

}  // namespace

Networks::Networks(const Architecture& a)
    : arch(a),
      actor_critic(a, /*with_critic=*/true),
      behavioral(a, /*with_critic=*/false),
      curiosity(a),
      credit(a) {}

ParamVector& ModelBundle::Get(ModuleTag tag) {
  return const_cast<ParamVector&>(std::as_const(*this).Get(tag));
}

const ParamVector& ModelBundle::Get(ModuleTag tag) const {
  switch (tag) {
    case ModuleTag::kActorCritic:
      return actor_critic;
    case ModuleTag::kSupervised:
      return supervised;
    case ModuleTag::kCuriosity:
      return curiosity;
    case ModuleTag::kCredit:
      return credit;
  }
  throw std::logic_error("unhandled module tag");
}

ModelBundle InitModel(const Networks& nets, sim::Rng& rng) {
  ModelBundle m;
  m.arch = nets.arch;
  m.actor_critic = nets.actor_critic.Zeros(ModuleTag::kActorCritic);
  nets.actor_critic.Init(m.actor_critic, rng);
  m.supervised = nets.behavioral.Zeros(ModuleTag::kSupervised);
  nets.behavioral.Init(m.supervised, rng);
  m.curiosity = nets.curiosity.Zeros();
  nets.curiosity.Init(m.curiosity, rng);
  m.credit = nets.credit.Zeros();
  nets.credit.Init(m.credit, rng);
  return m;
}

bool BundlesEqual(const ModelBundle& a, const ModelBundle& b) {
  if (!(a.arch == b.arch)) return false;
  for (ModuleTag t : kAllModules) {
    if (a.Get(t).values != b.Get(t).values) return false;
  }
  return true;
}

void SaveCheckpoint(const ModelBundle& model, const std::string& path,
                    const std::map<std::string, std::string>& metadata) {
  json j;
  j["format"] = "edgemarket-model";
  j["version"] = kCheckpointVersion;
  j["architecture"] = ArchitectureToJson(model.arch);
  j["metadata"] = metadata;
  json modules = json::array();
  for (ModuleTag t : kAllModules) {
    const ParamVector& p = model.Get(t);
    json layout = json::array();
    for (const TensorSlot& s : p.layout->slots()) {
      layout.push_back({{"name", s.name}, {"rows", s.rows}, {"cols", s.cols}});
    }
    modules.push_back({{"tag", std::string(ModuleTagName(t))},
                       {"layout", layout},
                       {"values", p.values}});
  }
  j["modules"] = modules;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write checkpoint " + path);
  out << j.dump() << '\n';
  if (!out) throw std::runtime_error("failed writing checkpoint " + path);
}

ModelBundle LoadCheckpoint(const std::string& path, const Networks& nets,
                           std::map<std::string, std::string>* metadata) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open checkpoint " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed checkpoint " + path + ": " + e.what());
  }
  if (j.value("format", "") != "edgemarket-model" ||
      j.value("version", -1) != kCheckpointVersion) {
    throw std::runtime_error("unsupported checkpoint format in " + path);
  }
  ModelBundle m;
  m.arch = ArchitectureFromJson(j.at("architecture"));
  if (!(m.arch == nets.arch)) {
    throw std::runtime_error("checkpoint architecture does not match config");
  }
  for (const json& mod : j.at("modules")) {
    const ModuleTag tag = ParseModuleTag(mod.at("tag").get<std::string>());
    ParamVector p = ZerosFor(nets, tag);
    const json& layout = mod.at("layout");
    const auto& slots = p.layout->slots();
    if (layout.size() != slots.size()) {
      throw std::runtime_error("checkpoint layout mismatch");
    }
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (layout[i].at("name") != slots[i].name ||
          layout[i].at("rows") != slots[i].rows ||
          layout[i].at("cols") != slots[i].cols) {
        throw std::runtime_error("checkpoint layout mismatch at " +
                                 slots[i].name);
      }
    }
    p.values = mod.at("values").get<std::vector<double>>();
    if (p.values.size() != p.layout->total() || !AllFinite(p.values)) {
      throw std::runtime_error("checkpoint values corrupt");
    }
    m.Get(tag) = std::move(p);
  }
  for (ModuleTag t : kAllModules) {
    if (!m.Get(t).layout) throw std::runtime_error("checkpoint module missing");
  }
  if (metadata != nullptr && j.contains("metadata")) {
    *metadata = j.at("metadata").get<std::map<std::string, std::string>>();
  }
  return m;
}

}  // namespace edgemarket::nn
