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

#include "edgemarket/meta/coordinator.h"

#include <algorithm>
#include <cmath>

namespace edgemarket::meta {
namespace {

// Empty string when `g` can be applied to `model`.
std::string CheckGradient(const nn::ModelBundle& model,
                          const agent::ShotGradient& g) {
  if (g.modules.size() != std::size(nn::kAllModules)) {
    return "expected " + std::to_string(std::size(nn::kAllModules)) +
           " module gradients, got " + std::to_string(g.modules.size());
  }
  for (std::size_t i = 0; i < g.modules.size(); ++i) {
    const nn::ModuleTag tag = nn::kAllModules[i];
    const nn::Gradient& grad = g.modules[i];
    if (grad.tag != tag) {
      return "module " + std::to_string(i) + " is tagged " +
             std::string(nn::ModuleTagName(grad.tag)) + ", expected " +
             std::string(nn::ModuleTagName(tag));
    }
    const nn::ParamVector& params = model.Get(tag);
    if (grad.layout == nullptr ||
        !nn::LayoutCompatible(*params.layout, *grad.layout) ||
        grad.values.size() != params.values.size()) {
      return std::string(nn::ModuleTagName(tag)) + ": layout mismatch";
    }
    if (!grad.IsFinite()) {
      return std::string(nn::ModuleTagName(tag)) + ": non-finite entries";
    }
  }
  return "";
}

void Apply(nn::ModelBundle& model, const agent::ShotGradient& g, double rate) {
  for (std::size_t i = 0; i < g.modules.size(); ++i) {
    std::vector<double>& v = model.Get(nn::kAllModules[i]).values;
    const std::vector<double>& d = g.modules[i].values;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += rate * d[j];
  }
}

}  // namespace

Coordinator::Coordinator(nn::ModelBundle initial, double meta_rate)
    : theta_(std::move(initial)), rate_(meta_rate) {}

SubmitResult Coordinator::Submit(int agent,
                                 const agent::ShotGradient& gradient) {
  std::lock_guard<std::mutex> lock(mu_);
  SubmitResult result;
  result.diagnostic = CheckGradient(theta_, gradient);
  if (!result.diagnostic.empty()) {
    ++rejections_;
    result.diagnostic =
        "agent " + std::to_string(agent) + ": " + result.diagnostic;
    result.snapshot = theta_;
    return result;
  }
  Apply(theta_, gradient, rate_);
  ++updates_;
  last_shot_[agent] = gradient.shot;
  result.accepted = true;
  result.snapshot = theta_;
  return result;
}

nn::ModelBundle Coordinator::Snapshot() const {
  std::lock_guard<std::mutex> lock(mu_);
  return theta_;
}

long Coordinator::updates() const {
  std::lock_guard<std::mutex> lock(mu_);
  return updates_;
}

long Coordinator::rejections() const {
  std::lock_guard<std::mutex> lock(mu_);
  return rejections_;
}

std::map<int, int> Coordinator::registry() const {
  std::lock_guard<std::mutex> lock(mu_);
  return last_shot_;
}

nn::ModelBundle ApplyClosedForm(const nn::ModelBundle& theta0,
                                const std::vector<agent::ShotGradient>& grads,
                                double meta_rate) {
  nn::ModelBundle out = theta0;
  for (const nn::ModuleTag tag : nn::kAllModules) {
    const std::size_t i = static_cast<std::size_t>(tag);
    std::vector<double>& v = out.Get(tag).values;
    for (std::size_t j = 0; j < v.size(); ++j) {
      double sum = 0.0;
      for (const agent::ShotGradient& g : grads) sum += g.modules[i].values[j];
      v[j] = theta0.Get(tag).values[j] + meta_rate * sum;
    }
  }
  return out;
}

bool MetaUpdateEquivalent(const nn::ModelBundle& theta0,
                          const std::vector<agent::ShotGradient>& grads,
                          double meta_rate, const nn::ModelBundle& state,
                          double rel_tol) {
  const nn::ModelBundle expected = ApplyClosedForm(theta0, grads, meta_rate);
  for (const nn::ModuleTag tag : nn::kAllModules) {
    const std::vector<double>& e = expected.Get(tag).values;
    const std::vector<double>& s = state.Get(tag).values;
    if (e.size() != s.size()) return false;
    for (std::size_t j = 0; j < e.size(); ++j) {
      const double scale = std::max(std::abs(e[j]), 1.0);
      if (!(std::abs(e[j] - s[j]) <= rel_tol * scale)) return false;
    }
  }
  return true;
}

}  // namespace edgemarket::meta
