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

#include "edgemarket/oracles/gradient_oracle.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <vector>

#include "edgemarket/nn/model.h"

namespace edgemarket::oracles {
namespace {

std::vector<double> RandomVector(sim::Rng& rng, int n, double lo = -1.0,
                                 double hi = 1.0) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.Uniform(lo, hi);
  return v;
}

std::vector<double> RandomBidFeature(sim::Rng& rng, const nn::Architecture& a) {
  std::vector<double> f(a.bid_feature_dim(), 0.0);
  f[rng.UniformInt(a.num_types)] = 1.0;
  for (int i = a.num_types; i < a.bid_feature_dim(); ++i) f[i] = rng.Uniform();
  return f;
}

// Small but structurally complete architecture so every coordinate can be
// differenced quickly.
nn::Architecture SmallArchitecture() {
  nn::Architecture a;
  a.stack_depth = 2;
  a.hidden = 6;
  a.price_levels = 4;
  a.curiosity_hidden = 5;
  a.credit_hidden = 4;
  a.credit_attention = 3;
  a.credit_segments = 5;
  return a;
}

struct Case {
  std::string name;
  nn::ParamVector* params;
  std::function<double(const nn::ParamVector&)> objective;
  std::function<nn::Gradient(const nn::ParamVector&)> analytic;
};

}  // namespace

FiniteDifferenceReport CompareWithFiniteDifferences(
    nn::ParamVector& params,
    const std::function<double(const nn::ParamVector&)>& objective,
    const nn::Gradient& analytic, double step) {
  FiniteDifferenceReport report;
  const auto& slots = params.layout->slots();
  for (std::size_t s = 0; s < slots.size(); ++s) {
    for (std::size_t k = 0; k < slots[s].size(); ++k) {
      const std::size_t i = slots[s].offset + k;
      const double saved = params.values[i];
      params.values[i] = saved + step;
      const double up = objective(params);
      params.values[i] = saved - step;
      const double down = objective(params);
      params.values[i] = saved;
      const double numeric = (up - down) / (2.0 * step);
      const double a = analytic.values[i];
      const double denom =
          std::max({std::abs(a), std::abs(numeric), kRelativeErrorFloor});
      const double rel = std::abs(a - numeric) / denom;
      ++report.checked;
      if (rel > report.max_relative_error) {
        report.max_relative_error = rel;
        report.worst_index = i;
        report.worst_name = slots[s].name;
      }
    }
  }
  return report;
}

CheckResult CheckModuleGradients(int initializations, std::uint64_t seed,
                                 double tolerance,
                                 const GradientMutation& mutate) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult result{"gradients", true, "", 0.0};
  const nn::Architecture arch = SmallArchitecture();
  const nn::Networks nets(arch);
  sim::Rng rng(seed);
  double worst = 0.0;
  std::size_t total = 0;

  for (int init = 0; init < initializations && result.passed; ++init) {
    nn::ModelBundle m = nn::InitModel(nets, rng);
    // Larger weights than the default init so heads are not near-linear.
    for (nn::ModuleTag t : nn::kAllModules) {
      for (double& v : m.Get(t).values) v += rng.Uniform(-0.3, 0.3);
    }

    const auto state = RandomVector(rng, arch.input_dim());
    std::vector<std::vector<double>> feats;
    std::vector<nn::BidAction> actions;
    const int n_bids = 1 + static_cast<int>(rng.UniformInt(3));
    for (int j = 0; j < n_bids; ++j) {
      feats.push_back(RandomBidFeature(rng, arch));
      nn::BidAction a;
      a.bid = rng.Bernoulli(0.6);
      a.level = static_cast<int>(rng.UniformInt(arch.price_levels));
      actions.push_back(a);
    }
    const auto s_now = RandomVector(rng, arch.state_dim());
    const auto s_next = RandomVector(rng, arch.state_dim());
    const int action_class =
        static_cast<int>(rng.UniformInt(arch.action_classes()));
    std::vector<std::vector<double>> seq;
    const int seq_len = 2 + static_cast<int>(rng.UniformInt(5));
    for (int t = 0; t < seq_len; ++t) {
      seq.push_back(RandomVector(rng, arch.credit_input_dim()));
    }
    const double target = rng.Uniform(-1.0, 1.0);

    std::vector<Case> cases;
    cases.push_back(
        {"actor-critic ln pi", &m.actor_critic,
         [&](const nn::ParamVector& p) {
           return nn::PolicyNetwork::LogProb(
               nets.actor_critic.Run(p, state, feats), actions);
         },
         [&](const nn::ParamVector& p) {
           return nets.actor_critic.GradLogPolicy(p, state, feats, actions);
         }});
    cases.push_back({"actor-critic V", &m.actor_critic,
                     [&](const nn::ParamVector& p) {
                       return nets.actor_critic.Value(p, state);
                     },
                     [&](const nn::ParamVector& p) {
                       auto pass = nets.actor_critic.Run(p, state, {});
                       nn::Gradient g = nn::Gradient::ZerosLike(p);
                       nets.actor_critic.Accumulate(p, pass, {}, 0.0, 1.0, g);
                       return g;
                     }});
    cases.push_back(
        {"behavioral ln psi", &m.supervised,
         [&](const nn::ParamVector& p) {
           return nn::PolicyNetwork::LogProb(
               nets.behavioral.Run(p, state, feats), actions);
         },
         [&](const nn::ParamVector& p) {
           return nets.behavioral.GradLogPolicy(p, state, feats, actions);
         }});
    cases.push_back({"curiosity forward", &m.curiosity,
                     [&](const nn::ParamVector& p) {
                       return nets.curiosity.ForwardLoss(p, state, action_class,
                                                         s_next, 0.0, nullptr);
                     },
                     [&](const nn::ParamVector& p) {
                       nn::Gradient g = nn::Gradient::ZerosLike(p);
                       nets.curiosity.ForwardLoss(p, state, action_class,
                                                  s_next, 1.0, &g);
                       return g;
                     }});
    cases.push_back({"curiosity inverse", &m.curiosity,
                     [&](const nn::ParamVector& p) {
                       return nets.curiosity.InverseLoss(p, s_now, s_next,
                                                         action_class, 0.0,
                                                         nullptr);
                     },
                     [&](const nn::ParamVector& p) {
                       nn::Gradient g = nn::Gradient::ZerosLike(p);
                       nets.curiosity.InverseLoss(p, s_now, s_next,
                                                  action_class, 1.0, &g);
                       return g;
                     }});
    cases.push_back({"credit", &m.credit,
                     [&](const nn::ParamVector& p) {
                       return nn::CreditNetwork::Loss(nets.credit.Run(p, seq),
                                                      target);
                     },
                     [&](const nn::ParamVector& p) {
                       nn::Gradient g = nn::Gradient::ZerosLike(p);
                       nets.credit.AccumulateLossGrad(
                           p, nets.credit.Run(p, seq), target, 1.0, g);
                       return g;
                     }});

    for (Case& c : cases) {
      nn::Gradient g = c.analytic(*c.params);
      if (mutate) mutate(g);
      const FiniteDifferenceReport r =
          CompareWithFiniteDifferences(*c.params, c.objective, g);
      total += r.checked;
      worst = std::max(worst, r.max_relative_error);
      if (r.max_relative_error > tolerance) {
        std::ostringstream os;
        os << c.name << " init " << init << ": relative error "
           << r.max_relative_error << " at " << r.worst_name;
        result.passed = false;
        result.detail = os.str();
        break;
      }
    }
  }
  if (result.passed) {
    std::ostringstream os;
    os << total << " coordinates, max relative error " << worst;
    result.detail = os.str();
  }
  result.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

}  // namespace edgemarket::oracles
