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

#ifndef EDGEMARKET_NN_DENSE_H_
#define EDGEMARKET_NN_DENSE_H_

#include <span>
#include <string>
#include <vector>

#include "edgemarket/nn/params.h"
#include "edgemarket/simcore/rng.h"

namespace edgemarket::nn {

// y = W x + b with W stored row-major (rows x cols).
void DenseForward(const double* w, const double* b, int rows, int cols,
                  const double* x, double* y);

// Accumulates dW += dy x^T, db += dy and, when dx is non-null, writes
// dx = W^T dy.
void DenseBackward(const double* w, int rows, int cols, const double* x,
                   const double* dy, double* dw, double* db, double* dx);

void SoftmaxInPlace(std::span<double> logits);
double Sigmoid(double x);

// Feed-forward stack of dense layers with tanh hidden activations. The last
// layer is linear unless `tanh_output` is set.
class Mlp {
 public:
  Mlp() = default;
  Mlp(ParamLayout& layout, const std::string& prefix, std::vector<int> sizes,
      bool tanh_output);

  struct Cache {
    // acts[0] is the input; acts[i] is the output of layer i.
    std::vector<std::vector<double>> acts;
  };

  int input_size() const { return sizes_.front(); }
  int output_size() const { return sizes_.back(); }

  void Forward(const ParamVector& p, std::span<const double> x,
               Cache& cache) const;
  const std::vector<double>& Output(const Cache& cache) const {
    return cache.acts.back();
  }

  // Accumulates d(out)/d(params)^T dout into grad. Writes d(out)/d(input)^T
  // dout into dx when non-null.
  void Backward(const ParamVector& p, const Cache& cache,
                std::span<const double> dout, Gradient& grad,
                std::vector<double>* dx) const;

  void Init(ParamVector& p, sim::Rng& rng, double output_gain = 1.0) const;

 private:
  std::vector<int> sizes_;
  std::vector<std::size_t> weight_slot_;
  std::vector<std::size_t> bias_slot_;
  bool tanh_output_ = false;
};

// Xavier-uniform initialisation of one weight block.
void XavierInit(double* w, int rows, int cols, sim::Rng& rng,
                double gain = 1.0);

}  // namespace edgemarket::nn

#endif  // EDGEMARKET_NN_DENSE_H_
