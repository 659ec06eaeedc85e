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

#include "edgemarket/nn/dense.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace edgemarket::nn {

void DenseForward(const double* w, const double* b, int rows, int cols,
                  const double* x, double* y) {
  for (int r = 0; r < rows; ++r) {
    const double* row = w + static_cast<std::size_t>(r) * cols;
    double acc = b[r];
    for (int c = 0; c < cols; ++c) acc += row[c] * x[c];
    y[r] = acc;
  }
}

void DenseBackward(const double* w, int rows, int cols, const double* x,
                   const double* dy, double* dw, double* db, double* dx) {
  if (dx != nullptr) std::fill(dx, dx + cols, 0.0);
  for (int r = 0; r < rows; ++r) {
    const double g = dy[r];
    db[r] += g;
    if (g == 0.0) continue;
    double* drow = dw + static_cast<std::size_t>(r) * cols;
    const double* row = w + static_cast<std::size_t>(r) * cols;
    for (int c = 0; c < cols; ++c) {
      drow[c] += g * x[c];
      if (dx != nullptr) dx[c] += g * row[c];
    }
  }
}

void SoftmaxInPlace(std::span<double> logits) {
  const double m = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (double& v : logits) {
    v = std::exp(v - m);
    sum += v;
  }
  for (double& v : logits) v /= sum;
}

double Sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

Mlp::Mlp(ParamLayout& layout, const std::string& prefix, std::vector<int> sizes,
         bool tanh_output)
    : sizes_(std::move(sizes)), tanh_output_(tanh_output) {
  if (sizes_.size() < 2) throw std::invalid_argument("mlp needs two sizes");
  for (std::size_t i = 0; i + 1 < sizes_.size(); ++i) {
    const std::string n = prefix + "." + std::to_string(i);
    weight_slot_.push_back(layout.Add(n + ".w", sizes_[i + 1], sizes_[i]));
    bias_slot_.push_back(layout.Add(n + ".b", sizes_[i + 1], 1));
  }
}

void Mlp::Forward(const ParamVector& p, std::span<const double> x,
                  Cache& cache) const {
  if (static_cast<int>(x.size()) != sizes_.front()) {
    throw std::invalid_argument("mlp input size mismatch");
  }
  const std::size_t layers = weight_slot_.size();
  cache.acts.resize(layers + 1);
  cache.acts[0].assign(x.begin(), x.end());
  for (std::size_t l = 0; l < layers; ++l) {
    auto& out = cache.acts[l + 1];
    out.resize(sizes_[l + 1]);
    DenseForward(p.data(weight_slot_[l]), p.data(bias_slot_[l]),
                 sizes_[l + 1], sizes_[l], cache.acts[l].data(), out.data());
    if (l + 1 < layers || tanh_output_) {
      for (double& v : out) v = std::tanh(v);
    }
  }
}

void Mlp::Backward(const ParamVector& p, const Cache& cache,
                   std::span<const double> dout, Gradient& grad,
                   std::vector<double>* dx) const {
  const std::size_t layers = weight_slot_.size();
  std::vector<double> delta(dout.begin(), dout.end());
  std::vector<double> below;
  for (std::size_t l = layers; l-- > 0;) {
    if (l + 1 < layers || tanh_output_) {
      const auto& y = cache.acts[l + 1];
      for (std::size_t i = 0; i < delta.size(); ++i) {
        delta[i] *= 1.0 - y[i] * y[i];
      }
    }
    const bool need_dx = l > 0 || dx != nullptr;
    below.assign(need_dx ? sizes_[l] : 0, 0.0);
    DenseBackward(p.data(weight_slot_[l]), sizes_[l + 1], sizes_[l],
                  cache.acts[l].data(), delta.data(), grad.data(weight_slot_[l]),
                  grad.data(bias_slot_[l]), need_dx ? below.data() : nullptr);
    delta.swap(below);
  }
  if (dx != nullptr) *dx = std::move(delta);
}

void Mlp::Init(ParamVector& p, sim::Rng& rng, double output_gain) const {
  const std::size_t layers = weight_slot_.size();
  for (std::size_t l = 0; l < layers; ++l) {
    XavierInit(p.data(weight_slot_[l]), sizes_[l + 1], sizes_[l], rng,
               l + 1 == layers ? output_gain : 1.0);
    std::fill_n(p.data(bias_slot_[l]), sizes_[l + 1], 0.0);
  }
}

void XavierInit(double* w, int rows, int cols, sim::Rng& rng, double gain) {
  const double limit = gain * std::sqrt(6.0 / (rows + cols));
  for (int i = 0; i < rows * cols; ++i) w[i] = rng.Uniform(-limit, limit);
}

}  // namespace edgemarket::nn
