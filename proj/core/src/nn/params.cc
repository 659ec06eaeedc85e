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

#include "edgemarket/nn/params.h"

#include <cmath>
#include <iostream>
#include <stdexcept>

namespace edgemarket::nn {

std::string_view ModuleTagName(ModuleTag tag) {
  switch (tag) {
    case ModuleTag::kActorCritic:
      return "actor-critic";
    case ModuleTag::kSupervised:
      return "supervised";
    case ModuleTag::kCuriosity:
      return "curiosity";
    case ModuleTag::kCredit:
      return "credit";
  }
  return "unknown";
}

ModuleTag ParseModuleTag(std::string_view name) {
  for (ModuleTag t : {ModuleTag::kActorCritic, ModuleTag::kSupervised,
                      ModuleTag::kCuriosity, ModuleTag::kCredit}) {
    if (ModuleTagName(t) == name) return t;
  }
  throw std::invalid_argument("unknown module tag: " + std::string(name));
}

std::size_t ParamLayout::Add(std::string name, int rows, int cols) {
  if (rows <= 0 || cols <= 0) {
    throw std::invalid_argument("tensor " + name + " has empty shape");
  }
  TensorSlot slot{std::move(name), rows, cols, total_};
  total_ += slot.size();
  slots_.push_back(std::move(slot));
  return slots_.size() - 1;
}

Gradient Gradient::ZerosLike(const ParamVector& p) {
  Gradient g;
  g.tag = p.tag;
  g.layout = p.layout;
  g.values.assign(p.values.size(), 0.0);
  return g;
}

bool Gradient::IsFinite() const { return AllFinite(values); }

void Gradient::Scale(double s) {
  for (double& v : values) v *= s;
}

void Gradient::Add(const Gradient& other, double scale) {
  if (other.values.size() != values.size()) {
    throw std::invalid_argument("gradient size mismatch");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] += scale * other.values[i];
  }
}

bool LayoutCompatible(const ParamLayout& a, const ParamLayout& b) {
  return a == b;
}

bool AllFinite(std::span<const double> v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

bool SgdStep(ParamVector& params, const Gradient& gradient, double rate) {
  if (gradient.values.size() != params.values.size() || !params.layout ||
      !gradient.layout || !LayoutCompatible(*params.layout, *gradient.layout)) {
    throw std::invalid_argument("gradient layout does not match parameters");
  }
  if (!gradient.IsFinite() || !std::isfinite(rate)) {
    std::clog << "warning: non-finite " << ModuleTagName(gradient.tag)
              << " gradient rejected\n";
    return false;
  }
  for (std::size_t i = 0; i < params.values.size(); ++i) {
    params.values[i] += rate * gradient.values[i];
  }
  return true;
}

}  // namespace edgemarket::nn
