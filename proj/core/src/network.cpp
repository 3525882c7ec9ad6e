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

#include "drjio/network.hpp"

#include <stdexcept>

#include "drjio/metrics.hpp"

namespace drjio {
namespace {

void require_finite(const CVector& v, const char* what, std::size_t iteration) {
  if (!v.allFinite()) throw DivergenceError(what, iteration);
}

class NlmsAgent final : public DiffusionAgent {
 public:
  explicit NlmsAgent(const AgentSettings& s)
      : state_(NlmsAgentState::zeros(s.m)), mu0_(s.nlms.mu0), eps_(s.baseline_eps) {}

  void adapt(const Sample& sample, std::size_t iteration) override {
    nlms_adapt(state_, sample, mu0_, eps_);
    require_finite(state_.psi, "diffusion NLMS state became non-finite", iteration);
  }
  const CVector& published() const override { return state_.psi; }
  void absorb(CVector combined) override { state_.omega = std::move(combined); }
  CVector estimate() const override { return state_.omega; }
  Eigen::Index payload_size() const override { return state_.psi.size(); }

 private:
  NlmsAgentState state_;
  double mu0_;
  double eps_;
};

class RlsAgent final : public DiffusionAgent {
 public:
  explicit RlsAgent(const AgentSettings& s)
      : state_(RlsAgentState::initial(s.m, s.delta_init)), lambda_(s.lambda) {}

  void adapt(const Sample& sample, std::size_t iteration) override {
    rls_adapt(state_, sample, lambda_);
    require_finite(state_.psi, "diffusion RLS state became non-finite", iteration);
    if (!state_.p_inv.allFinite()) throw DivergenceError("diffusion RLS inverse became non-finite", iteration);
  }
  const CVector& published() const override { return state_.psi; }
  void absorb(CVector combined) override { state_.omega = std::move(combined); }
  CVector estimate() const override { return state_.omega; }
  Eigen::Index payload_size() const override { return state_.psi.size(); }

 private:
  RlsAgentState state_;
  double lambda_;
};

class DrjioNlmsAgent final : public DiffusionAgent {
 public:
  explicit DrjioNlmsAgent(const AgentSettings& s) : state_(DrjioNlmsState::initial(s.m, s.d)), hyper_(s.nlms) {
    hyper_.validate();
  }

  void adapt(const Sample& sample, std::size_t iteration) override {
    drjio_nlms_adapt(state_, sample, hyper_, iteration);
  }
  const CVector& published() const override { return state_.psi_bar; }
  void absorb(CVector combined) override { state_.omega_bar = std::move(combined); }
  CVector estimate() const override { return reconstruct(state_.s_d, state_.omega_bar); }
  Eigen::Index payload_size() const override { return state_.psi_bar.size(); }

 private:
  DrjioNlmsState state_;
  DrjioNlmsHyper hyper_;
};

class DrjioRlsAgent final : public DiffusionAgent {
 public:
  explicit DrjioRlsAgent(const AgentSettings& s)
      : state_(DrjioRlsState::initial(s.m, s.d, s.delta_init)), lambda_(s.lambda) {}

  void adapt(const Sample& sample, std::size_t iteration) override {
    drjio_rls_adapt(state_, sample, lambda_, iteration);
  }
  const CVector& published() const override { return state_.psi_bar; }
  void absorb(CVector combined) override { state_.omega_bar = std::move(combined); }
  CVector estimate() const override { return reconstruct(state_.s_d, state_.omega_bar); }
  Eigen::Index payload_size() const override { return state_.psi_bar.size(); }

 private:
  DrjioRlsState state_;
  double lambda_;
};

}  // namespace

std::string to_string(SimAlgorithm algorithm) {
  switch (algorithm) {
    case SimAlgorithm::kDrjioNlms:
      return "drjio-nlms";
    case SimAlgorithm::kDrjioRls:
      return "drjio-rls";
    case SimAlgorithm::kDiffusionNlms:
      return "dnlms";
    case SimAlgorithm::kDiffusionRls:
      return "drls";
  }
  return "unknown";
}

SimAlgorithm parse_sim_algorithm(const std::string& name) {
  for (SimAlgorithm a : kAllSimAlgorithms) {
    if (to_string(a) == name) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + name + "' (expected drjio-nlms, drjio-rls, dnlms or drls)");
}

std::unique_ptr<DiffusionAgent> make_agent(SimAlgorithm algorithm, const AgentSettings& settings) {
  switch (algorithm) {
    case SimAlgorithm::kDrjioNlms:
      return std::make_unique<DrjioNlmsAgent>(settings);
    case SimAlgorithm::kDrjioRls:
      return std::make_unique<DrjioRlsAgent>(settings);
    case SimAlgorithm::kDiffusionNlms:
      return std::make_unique<NlmsAgent>(settings);
    case SimAlgorithm::kDiffusionRls:
      return std::make_unique<RlsAgent>(settings);
  }
  throw std::invalid_argument("unknown algorithm");
}

void SampleChecksum::mix(const void* data, std::size_t bytes) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < bytes; ++i) {
    hash_ ^= p[i];
    hash_ *= 1099511628211ull;
  }
}

void SampleChecksum::add(const Sample& sample) {
  mix(sample.x.data(), static_cast<std::size_t>(sample.x.size()) * sizeof(Complex));
  mix(&sample.d, sizeof(Complex));
}

DiffusionNetwork::DiffusionNetwork(SimAlgorithm algorithm, const AgentSettings& settings, const Topology& topology,
                                   const CombinationMatrix& weights)
    : algorithm_(algorithm) {
  if (weights.size() != topology.size()) throw std::invalid_argument("weights and topology differ in size");
  const std::size_t n = topology.size();
  agents_.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    agents_.push_back(make_agent(algorithm, settings));
    neighbors_.push_back(topology.neighbors(k));
    weights_.push_back(weights.row(k, neighbors_.back()));
  }
  snapshot_.resize(n);
}

StepErrors DiffusionNetwork::step(const std::vector<Sample>& samples, const CVector& omega0, std::size_t iteration) {
  const std::size_t n = agents_.size();
  if (samples.size() != n) throw std::invalid_argument("one sample per node is required");

  StepErrors errors;
  for (std::size_t k = 0; k < n; ++k) {
    checksum_.add(samples[k]);
    const CVector w = agents_[k]->estimate();
    errors.mse += record_error(w, samples[k]);
    errors.msd += (w - omega0).squaredNorm();
  }
  errors.mse /= static_cast<double>(n);
  errors.msd /= static_cast<double>(n);

  for (std::size_t k = 0; k < n; ++k) agents_[k]->adapt(samples[k], iteration);

  // Publication: each node hands exactly one vector to the network.
  for (std::size_t k = 0; k < n; ++k) {
    const CVector& out = agents_[k]->published();
    if (out.size() != agents_[k]->payload_size()) throw std::logic_error("published vector has the wrong size");
    snapshot_[k] = out;
    values_exchanged_ += static_cast<std::uint64_t>(out.size());
    ++publications_;
  }

  std::vector<CVector> gathered;
  for (std::size_t k = 0; k < n; ++k) {
    gathered.clear();
    for (std::size_t l : neighbors_[k]) gathered.push_back(snapshot_[l]);
    agents_[k]->absorb(combine(gathered, weights_[k]));
  }
  return errors;
}

std::vector<CVector> DiffusionNetwork::estimates() const {
  std::vector<CVector> out;
  out.reserve(agents_.size());
  for (const auto& a : agents_) out.push_back(a->estimate());
  return out;
}

}  // namespace drjio
