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
#include <memory>
#include <string>
#include <vector>

#include "drjio/baselines.hpp"
#include "drjio/drjio.hpp"
#include "drjio/signal.hpp"
#include "drjio/topology.hpp"
#include "drjio/types.hpp"

namespace drjio {

enum class SimAlgorithm { kDrjioNlms, kDrjioRls, kDiffusionNlms, kDiffusionRls };

inline constexpr SimAlgorithm kAllSimAlgorithms[] = {
    SimAlgorithm::kDrjioNlms, SimAlgorithm::kDrjioRls, SimAlgorithm::kDiffusionNlms, SimAlgorithm::kDiffusionRls};

std::string to_string(SimAlgorithm algorithm);
SimAlgorithm parse_sim_algorithm(const std::string& name);

// Everything an agent needs besides its data: dimensions and step parameters.
struct AgentSettings {
  Eigen::Index m = 20;
  Eigen::Index d = 5;
  DrjioNlmsHyper nlms;         // mu0 is shared with the full-rank NLMS baseline
  double baseline_eps = 1e-12;  // x^H x guard of the full-rank NLMS baseline
  double lambda = 0.99;
  double delta_init = 0.11;
};

// One node running an ATC diffusion algorithm. The network only ever sees
// the vector returned by published(); the rest of the state stays local.
class DiffusionAgent {
 public:
  virtual ~DiffusionAgent() = default;

  // Local adaptation on the node's own sample. Throws DivergenceError.
  virtual void adapt(const Sample& sample, std::size_t iteration) = 0;

  // Intermediate estimate sent to neighbors (psi or psi_bar).
  virtual const CVector& published() const = 0;

  // Stores the convex combination of the neighbors' published vectors.
  virtual void absorb(CVector combined) = 0;

  // Full-dimension estimate of omega_0 from the current state.
  virtual CVector estimate() const = 0;

  // Number of complex values in published().
  virtual Eigen::Index payload_size() const = 0;
};

std::unique_ptr<DiffusionAgent> make_agent(SimAlgorithm algorithm, const AgentSettings& settings);

// Byte-level FNV-1a digest of a sample sequence.
class SampleChecksum {
 public:
  void add(const Sample& sample);
  std::uint64_t value() const noexcept { return hash_; }

 private:
  void mix(const void* data, std::size_t bytes);
  std::uint64_t hash_ = 1469598103934665603ull;
};

// Network-average error figures measured before an iteration's adaptation.
struct StepErrors {
  double mse = 0.0;  // (1/N) sum_k |d_k - omega_k^H x_k|^2
  double msd = 0.0;  // (1/N) sum_k ||omega_k - omega_0||^2
};

// Synchronous adapt-then-combine network. All exchange between agents goes
// through step(), which counts every published value.
class DiffusionNetwork {
 public:
  DiffusionNetwork(SimAlgorithm algorithm, const AgentSettings& settings, const Topology& topology,
                   const CombinationMatrix& weights);

  // Records the a-priori errors on `samples`, adapts every agent, then
  // combines the published snapshot. Throws DivergenceError.
  StepErrors step(const std::vector<Sample>& samples, const CVector& omega0, std::size_t iteration);

  std::size_t size() const noexcept { return agents_.size(); }
  const DiffusionAgent& agent(std::size_t k) const { return *agents_.at(k); }
  std::vector<CVector> estimates() const;

  SimAlgorithm algorithm() const noexcept { return algorithm_; }
  std::uint64_t values_exchanged() const noexcept { return values_exchanged_; }
  std::size_t publications() const noexcept { return publications_; }
  std::uint64_t consumed_checksum() const noexcept { return checksum_.value(); }

 private:
  SimAlgorithm algorithm_;
  std::vector<std::unique_ptr<DiffusionAgent>> agents_;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::vector<std::vector<double>> weights_;
  std::vector<CVector> snapshot_;
  std::uint64_t values_exchanged_ = 0;
  std::size_t publications_ = 0;
  SampleChecksum checksum_;
};

}  // namespace drjio
