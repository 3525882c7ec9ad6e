// Copyright 2026 The drjio Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "drjio/baselines.hpp"
#include "drjio/drjio.hpp"
#include "drjio/harness.hpp"
#include "drjio/rng.hpp"
#include "drjio/signal.hpp"

namespace drjio {
namespace {

// A fixed pool of samples so the timed loop measures only the adapt step.
std::vector<Sample> sample_pool(Eigen::Index m, std::size_t count) {
  NodeSignalModel model;
  model.alpha = 0.3;
  model.noise_var = 0.001;
  model.regressor_len = m;
  const CVector omega0 = make_parameter(ParameterKind::kFullRank, m, m, 1).omega0;
  NodeStream stream(model, omega0, make_engine({1, 1}), make_engine({1, 2}));
  std::vector<Sample> pool;
  pool.reserve(count);
  for (std::size_t i = 0; i < count; ++i) pool.push_back(stream.next());
  return pool;
}

constexpr std::size_t kPool = 256;

void BM_DrjioNlmsAdapt(benchmark::State& state) {
  const Eigen::Index m = state.range(0);
  const Eigen::Index d = state.range(1);
  const auto pool = sample_pool(m, kPool);
  DrjioNlmsState s = DrjioNlmsState::initial(m, d);
  const DrjioNlmsHyper hyper;
  std::size_t i = 0;
  for (auto _ : state) {
    drjio_nlms_adapt(s, pool[i++ % kPool], hyper);
    s.omega_bar = s.psi_bar;
    benchmark::DoNotOptimize(s.psi_bar.data());
  }
}
BENCHMARK(BM_DrjioNlmsAdapt)->ArgsProduct({{20, 60, 100}, {5, 10}});

void BM_DrjioRlsAdapt(benchmark::State& state) {
  const Eigen::Index m = state.range(0);
  const Eigen::Index d = state.range(1);
  const auto pool = sample_pool(m, kPool);
  DrjioRlsState s = DrjioRlsState::initial(m, d, 0.11);
  std::size_t i = 0;
  for (auto _ : state) {
    drjio_rls_adapt(s, pool[i++ % kPool], 0.99);
    s.omega_bar = s.psi_bar;
    benchmark::DoNotOptimize(s.psi_bar.data());
  }
}
BENCHMARK(BM_DrjioRlsAdapt)->ArgsProduct({{20, 60, 100}, {5, 10}});

void BM_NlmsAdapt(benchmark::State& state) {
  const Eigen::Index m = state.range(0);
  const auto pool = sample_pool(m, kPool);
  NlmsAgentState s = NlmsAgentState::zeros(m);
  std::size_t i = 0;
  for (auto _ : state) {
    nlms_adapt(s, pool[i++ % kPool], 0.15);
    s.omega = s.psi;
    benchmark::DoNotOptimize(s.psi.data());
  }
}
BENCHMARK(BM_NlmsAdapt)->Arg(20)->Arg(60)->Arg(100);

void BM_RlsAdapt(benchmark::State& state) {
  const Eigen::Index m = state.range(0);
  const auto pool = sample_pool(m, kPool);
  RlsAgentState s = RlsAgentState::initial(m, 0.11);
  std::size_t i = 0;
  for (auto _ : state) {
    rls_adapt(s, pool[i++ % kPool], 0.99);
    s.omega = s.psi;
    benchmark::DoNotOptimize(s.psi.data());
  }
}
BENCHMARK(BM_RlsAdapt)->Arg(20)->Arg(60)->Arg(100);

// One full network iteration of the default WSN scenario per algorithm.
void BM_ScenarioIteration(benchmark::State& state) {
  ScenarioConfig config = scenario_preset("wsn-full-20");
  config.runs = 1;
  config.iterations = 50;
  config.threads = 1;
  config.algorithms = {kAllSimAlgorithms[static_cast<std::size_t>(state.range(0))]};
  state.SetLabel(to_string(config.algorithms[0]));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_scenario(config).algorithms.size());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(config.iterations));
}
BENCHMARK(BM_ScenarioIteration)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace drjio

BENCHMARK_MAIN();
