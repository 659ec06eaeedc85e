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

#ifndef EDGEMARKET_NN_MODEL_H_
#define EDGEMARKET_NN_MODEL_H_

#include <map>
#include <string>

#include "edgemarket/nn/architecture.h"
#include "edgemarket/nn/credit_net.h"
#include "edgemarket/nn/curiosity_net.h"
#include "edgemarket/nn/params.h"
#include "edgemarket/nn/policy.h"
#include "edgemarket/simcore/rng.h"

namespace edgemarket::nn {

// The four network definitions a bidder trains. Immutable after
// construction, so one instance can be shared by every bidder.
struct Networks {
  explicit Networks(const Architecture& a);

  Architecture arch;
  PolicyNetwork actor_critic;
  PolicyNetwork behavioral;
  CuriosityNetwork curiosity;
  CreditNetwork credit;
};

// Parameters of all four modules.
struct ModelBundle {
  Architecture arch;
  ParamVector actor_critic;
  ParamVector supervised;
  ParamVector curiosity;
  ParamVector credit;

  ParamVector& Get(ModuleTag tag);
  const ParamVector& Get(ModuleTag tag) const;
};

inline constexpr ModuleTag kAllModules[] = {
    ModuleTag::kActorCritic, ModuleTag::kSupervised, ModuleTag::kCuriosity,
    ModuleTag::kCredit};

ModelBundle InitModel(const Networks& nets, sim::Rng& rng);

bool BundlesEqual(const ModelBundle& a, const ModelBundle& b);

inline constexpr int kCheckpointVersion = 1;

// Structured-text checkpoint: architecture, per-module layout and values.
// Doubles are written with round-trip precision.
void SaveCheckpoint(const ModelBundle& model, const std::string& path,
                    const std::map<std::string, std::string>& metadata = {});

// Throws std::runtime_error if the file is unreadable, has another version,
// or does not match `nets`. Fills `metadata` when given.
ModelBundle LoadCheckpoint(const std::string& path, const Networks& nets,
                           std::map<std::string, std::string>* metadata =
                               nullptr);

}  // namespace edgemarket::nn

#endif  // EDGEMARKET_NN_MODEL_H_
