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

#include <memory>
#include <vector>

#include "benchmark/benchmark.h"
#include "edgemarket/agent/state.h"
#include "edgemarket/baselines/factory.h"
#include "edgemarket/market/auction.h"
#include "edgemarket/nn/model.h"
#include "edgemarket/scenarios/config.h"
#include "edgemarket/scenarios/simulation.h"

namespace edgemarket {
namespace {

void BM_TypeAuction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sim::Rng rng(1);
  std::vector<market::Bid> bids(n);
  for (int i = 0; i < n; ++i) {
    bids[i].request = i;
    bids[i].bidder = i;
    bids[i].price = rng.Uniform();
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(market::RunTypeAuction(bids, n / 2 + 1, rng));
  }
}
BENCHMARK(BM_TypeAuction)->Arg(8)->Arg(64)->Arg(512);

void BM_PolicyForward(benchmark::State& state) {
  const nn::Architecture arch;
  const nn::Networks nets(arch);
  sim::Rng rng(2);
  const nn::ModelBundle model = nn::InitModel(nets, rng);
  std::vector<double> input(arch.input_dim());
  for (double& v : input) v = rng.Uniform();
  std::vector<std::vector<double>> bids(
      state.range(0), std::vector<double>(arch.bid_feature_dim(), 0.5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        nets.actor_critic.Run(model.actor_critic, input, bids));
  }
}
BENCHMARK(BM_PolicyForward)->Arg(1)->Arg(4);

void BM_SimulationStep(benchmark::State& state) {
  scenarios::ScenarioConfig c = scenarios::TestPreset();
  c.population = {{"random", 6}};
  std::vector<scenarios::Participant> participants;
  for (int m = 0; m < 6; ++m) {
    participants.push_back(
        {std::make_unique<baselines::RandomBidder>(11, sim::Rng(m)), false});
  }
  scenarios::Simulation sim(c, 1, std::move(participants));
  for (auto _ : state) sim.Step();
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SimulationStep);

}  // namespace
}  // namespace edgemarket

BENCHMARK_MAIN();
