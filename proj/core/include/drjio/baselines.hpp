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

#include <vector>

#include "drjio/signal.hpp"
#include "drjio/types.hpp"

namespace drjio {

// ATC diffusion NLMS agent: omega is the combined estimate, psi the local
// intermediate published to neighbors.
struct NlmsAgentState {
  CVector omega;
  CVector psi;

  static NlmsAgentState zeros(Eigen::Index m);
};

// psi = omega + mu0 / (x^H x + eps) * x * conj(d - omega^H x)
void nlms_adapt(NlmsAgentState& state, const Sample& sample, double mu0, double eps = 1e-12);

// Exponentially weighted RLS agent run on the local stream.
struct RlsAgentState {
  CVector omega;
  CVector psi;
  CMatrix p_inv;

  // omega = psi = 0 and p_inv = I / delta_init.
  static RlsAgentState initial(Eigen::Index m, double delta_init);
};

// g = P x / (lambda + x^H P x), psi = omega + g conj(d - omega^H x),
// P <- (P - g x^H P) / lambda, then Hermitian symmetrization.
void rls_adapt(RlsAgentState& state, const Sample& sample, double lambda);

// omega = sum_l c_kl psi_l. Throws std::invalid_argument when the weight and
// vector counts differ or the vectors differ in length.
CVector combine(const std::vector<CVector>& psis, const std::vector<double>& weights);

}  // namespace drjio
