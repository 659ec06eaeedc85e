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

#ifndef EDGEMARKET_NN_PARAMS_H_
#define EDGEMARKET_NN_PARAMS_H_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace edgemarket::nn {

enum class ModuleTag { kActorCritic, kSupervised, kCuriosity, kCredit };

std::string_view ModuleTagName(ModuleTag tag);
ModuleTag ParseModuleTag(std::string_view name);

// Shape and position of one weight block inside a flat parameter array.
struct TensorSlot {
  std::string name;
  int rows = 0;
  int cols = 0;
  std::size_t offset = 0;

  std::size_t size() const { return static_cast<std::size_t>(rows) * cols; }
  bool operator==(const TensorSlot&) const = default;
};

class ParamLayout {
 public:
  // Appends a rows x cols block and returns its index.
  std::size_t Add(std::string name, int rows, int cols);

  const std::vector<TensorSlot>& slots() const { return slots_; }
  const TensorSlot& slot(std::size_t i) const { return slots_[i]; }
  std::size_t total() const { return total_; }

  bool operator==(const ParamLayout&) const = default;

 private:
  std::vector<TensorSlot> slots_;
  std::size_t total_ = 0;
};

// Flat parameter storage for one differentiable module.
struct ParamVector {
  ModuleTag tag = ModuleTag::kActorCritic;
  std::shared_ptr<const ParamLayout> layout;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double* data(std::size_t slot) { return values.data() + layout->slot(slot).offset; }
  const double* data(std::size_t slot) const {
    return values.data() + layout->slot(slot).offset;
  }
};

// Gradient (ascent direction) aligned with a ParamVector layout.
struct Gradient {
  ModuleTag tag = ModuleTag::kActorCritic;
  std::shared_ptr<const ParamLayout> layout;
  std::vector<double> values;
  int agent = -1;
  int shot = 0;

  static Gradient ZerosLike(const ParamVector& p);

  std::size_t size() const { return values.size(); }
  double* data(std::size_t slot) { return values.data() + layout->slot(slot).offset; }
  bool IsFinite() const;
  void Scale(double s);
  void Add(const Gradient& other, double scale = 1.0);
};

bool LayoutCompatible(const ParamLayout& a, const ParamLayout& b);
bool AllFinite(std::span<const double> v);

// theta' = theta + rate * gradient. A non-finite gradient is rejected: the
// step is skipped, a warning is logged and false is returned.
bool SgdStep(ParamVector& params, const Gradient& gradient, double rate);

}  // namespace edgemarket::nn

#endif  // EDGEMARKET_NN_PARAMS_H_
