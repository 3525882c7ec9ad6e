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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "drjio/metrics.hpp"
#include "drjio/network.hpp"
#include "drjio/scenario.hpp"
#include "drjio/signal.hpp"
#include "drjio/topology.hpp"

namespace drjio {

// Quantities fixed by (config, seed) and shared by every Monte Carlo run:
// the graph, its weights, the per-node input models and omega_0.
struct ScenarioInstance {
  Topology topology;
  CombinationMatrix weights;
  std::vector<NodeSignalModel> nodes;
  ParameterVector omega0;
};

ScenarioInstance build_instance(const ScenarioConfig& config);

// Agent settings with the dimensions taken from the config.
AgentSettings agent_settings(const ScenarioConfig& config);

struct AlgorithmResult {
  SimAlgorithm algorithm = SimAlgorithm::kDrjioNlms;
  MseTrace mse;  // mean over the runs that did not diverge
  MseTrace msd;
  std::vector<MseTrace> run_mse;              // per run; shorter when the run diverged
  std::vector<bool> diverged;                 // per run
  std::vector<std::size_t> divergence_iteration;  // per run, meaningful when diverged
  std::size_t diverged_runs = 0;
  std::vector<std::vector<CVector>> final_estimates;  // [run][node], empty for diverged runs
  std::vector<std::uint64_t> consumed_checksums;      // per run
  std::uint64_t values_exchanged = 0;                 // complex values, all runs
  std::size_t publications = 0;                       // node-iteration publications, all runs
  Eigen::Index payload_size = 0;                      // complex values per publication
};

struct ScenarioResult {
  ScenarioConfig config;
  ScenarioInstance instance;
  std::vector<AlgorithmResult> algorithms;
  std::vector<std::uint64_t> stream_checksums;  // per run, as generated
  bool paired_data_verified = false;            // every finished run consumed the generated stream
};

// Runs all selected algorithms on the same data realization per run, with
// runs distributed over config.threads workers. Output is independent of
// the thread count.
ScenarioResult run_scenario(const ScenarioConfig& config);

// iteration,algorithm,scenario,mse,mse_db,msd
void write_mse_csv(std::ostream& out, const ScenarioResult& result);

// Resolved configuration followed by instance and outcome details.
void write_manifest(std::ostream& out, const ScenarioResult& result);

struct RankSweepRow {
  Eigen::Index d = 0;
  std::string algorithm;
  double mse = 0.0;
};

// For each D in [d_lo, d_hi]: the final-iteration network MSE of every
// selected algorithm and the node-averaged rank-D Wiener MSE (algorithm
// label "rank-d-wiener").
std::vector<RankSweepRow> rank_sweep(const ScenarioConfig& config, Eigen::Index d_lo, Eigen::Index d_hi);

// D,algorithm,scenario,mse,mse_db
void write_rank_sweep_csv(std::ostream& out, const std::string& scenario, const std::vector<RankSweepRow>& rows);

}  // namespace drjio
