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

#include "drjio/baselines.hpp"

#include <stdexcept>

namespace drjio {

NlmsAgentState NlmsAgentState::zeros(Eigen::Index m) {
  return NlmsAgentState{CVector::Zero(m), CVector::Zero(m)};
}

void nlms_adapt(NlmsAgentState& state, const Sample& sample, double mu0, double eps) {
  const Complex e = sample.d - state.omega.dot(sample.x);
  const double mu = mu0 / (sample.x.squaredNorm() + eps);
  state.psi = state.omega + (mu * std::conj(e)) * sample.x;
}

RlsAgentState RlsAgentState::initial(Eigen::Index m, double delta_init) {
  if (!(delta_init > 0.0)) throw std::invalid_argument("RLS initialization requires delta > 0");
  return RlsAgentState{CVector::Zero(m), CVector::Zero(m),
                       CMatrix::Identity(m, m) / delta_init};
}

void rls_adapt(RlsAgentState& state, const Sample& sample, double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw std::invalid_argument("forgetting factor must lie in (0, 1]");
  const CVector px = state.p_inv * sample.x;
  const Complex denom = lambda + sample.x.dot(px);
  const CVector g = px / denom;
  const Complex e = sample.d - state.omega.dot(sample.x);
  state.psi = state.omega + std::conj(e) * g;
  // x^H P is the row vector (P^H x)^H = (P x)^H for Hermitian P.
  state.p_inv = (state.p_inv - g * px.adjoint()) / lambda;
  hermitize(state.p_inv);
}

CVector combine(const std::vector<CVector>& psis, const std::vector<double>& weights) {
  if (psis.empty()) throw std::invalid_argument("combine needs at least one neighbor");
  if (psis.size() != weights.size()) throw std::invalid_argument("combine: weight and neighbor counts differ");
  CVector out = CVector::Zero(psis.front().size());
  for (std::size_t l = 0; l < psis.size(); ++l) {
    if (psis[l].size() != out.size()) throw std::invalid_argument("combine: neighbor vectors differ in length");
    out += weights[l] * psis[l];
  }
  return out;
}

}  // namespace drjio
