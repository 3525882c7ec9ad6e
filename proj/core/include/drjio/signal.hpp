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

#include <cstdint>
#include <string>
#include <vector>

#include "drjio/rng.hpp"
#include "drjio/topology.hpp"
#include "drjio/types.hpp"

namespace drjio {

enum class ParameterKind { kFullRank, kSparse, kAllOnes };

std::string to_string(ParameterKind kind);
ParameterKind parse_parameter_kind(const std::string& name);

// The unknown vector omega_0 of the linear measurement model.
struct ParameterVector {
  CVector omega0;
  ParameterKind kind = ParameterKind::kFullRank;
};

// full-rank: M i.i.d. unit-variance circular Gaussian entries.
// sparse: `d` such entries at distinct random positions, the rest exactly 0.
// all-ones: a vector of ones (d and seed are ignored).
ParameterVector make_parameter(ParameterKind kind, Eigen::Index m, Eigen::Index d, std::uint64_t seed);

// Per-node AR(1) input model x(i) = u(i) + alpha x(i-1) with innovation
// variance 1 - |alpha|^2, so the stationary variance is 1.
struct NodeSignalModel {
  Complex alpha{0.0, 0.0};
  double noise_var = 0.001;
  Eigen::Index regressor_len = 1;

  double innovation_var() const { return 1.0 - std::norm(alpha); }

  // Throws std::invalid_argument for |alpha| >= 1, negative noise or M < 1.
  void validate() const;
};

struct Sample {
  CVector x;
  Complex d{0.0, 0.0};
};

// Shift register [x(i), x(i-1), ..., x(i-M+1)] over the scalar AR(1)
// process. The process is warmed up for 10 M steps before the first vector.
class Ar1RegressorStream {
 public:
  Ar1RegressorStream(const NodeSignalModel& model, Engine engine);
  Ar1RegressorStream(const NodeSignalModel& model, std::uint64_t seed);

  const CVector& next();
  const CVector& current() const noexcept { return reg_; }

 private:
  Complex step();

  Complex alpha_;
  Engine engine_;
  ComplexGaussian innovation_;
  Complex last_{0.0, 0.0};
  CVector reg_;
};

// d = omega0^H x + n with n circular Gaussian of variance noise_var.
Complex measure(const CVector& omega0, const CVector& x, double noise_var, Engine& engine);

// Regressor and noise streams for one node, drawn from independent engines.
class NodeStream {
 public:
  NodeStream(const NodeSignalModel& model, const CVector& omega0, Engine regressor_engine,
             Engine noise_engine);

  const Sample& next();

 private:
  NodeSignalModel model_;
  CVector omega0_;
  Ar1RegressorStream regressors_;
  Engine noise_engine_;
  Sample sample_;
};

// DC state estimation stand-in: one AR(1) (alpha = 0) regressor per bus of
// length n_buses * users_per_bus, an all-ones state and the IEEE 14-bus graph.
struct SmartGridModel {
  std::vector<NodeSignalModel> nodes;
  ParameterVector omega0;
  Topology topology;
};

SmartGridModel smartgrid_models(std::size_t n_buses, std::size_t users_per_bus, double noise_var);

}  // namespace drjio
