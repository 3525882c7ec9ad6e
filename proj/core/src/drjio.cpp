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

#include "drjio/drjio.hpp"

#include <stdexcept>

#include "drjio/baselines.hpp"

namespace drjio {
namespace {

void check_dims(Eigen::Index m, Eigen::Index d) {
  if (m < 1 || d < 1) throw std::invalid_argument("M and D must be at least 1");
  if (d > m) throw std::invalid_argument("reduced rank D must not exceed M");
}

void require_finite(bool ok, const char* what, std::size_t iteration) {
  if (!ok) throw DivergenceError(what, iteration);
}

}  // namespace

void DrjioNlmsHyper::validate() const {
  if (!(mu0 > 0.0)) throw std::invalid_argument("mu0 must be positive");
  if (!(eta0 >= 0.0)) throw std::invalid_argument("eta0 must be nonnegative");
  if (!(gamma >= 0.0) || !(delta >= 0.0)) throw std::invalid_argument("gamma and delta must be nonnegative");
  if (!(eps >= 0.0) || !(eta_eps >= 0.0)) throw std::invalid_argument("denominator guards must be nonnegative");
}

DrjioNlmsState DrjioNlmsState::initial(Eigen::Index m, Eigen::Index d) {
  check_dims(m, d);
  return DrjioNlmsState{identity_top(m, d), CVector::Zero(d), CVector::Zero(d)};
}

void drjio_nlms_adapt(DrjioNlmsState& state, const Sample& sample, const DrjioNlmsHyper& hyper,
                      std::size_t iteration) {
  const CVector& x = sample.x;
  const CVector x_bar = state.s_d.adjoint() * x;
  const Complex e = sample.d - state.omega_bar.dot(x_bar);
  const double xx = x.squaredNorm();

  const double mu = hyper.mu0 / (xx + hyper.eps);
  state.psi_bar = state.omega_bar + (mu * std::conj(e)) * x_bar;

  const double eta = hyper.eta0 / (state.omega_bar.squaredNorm() * xx + hyper.eta_eps);
  if (eta != 0.0) {
    // x^H S_D is the row vector x_bar^H computed above (from the old S_D).
    CMatrix step = (std::conj(e) * x) * state.omega_bar.adjoint();
    step -= (hyper.delta * x) * x_bar.adjoint();
    step.topLeftCorner(state.s_d.cols(), state.s_d.cols()).diagonal().array() += hyper.gamma * std::conj(sample.d);
    state.s_d += eta * step;
  }
  require_finite(state.psi_bar.allFinite() && state.s_d.allFinite(), "DRJIO-NLMS state became non-finite",
                 iteration);
}

DrjioRlsState DrjioRlsState::initial(Eigen::Index m, Eigen::Index d, double delta_init) {
  check_dims(m, d);
  if (!(delta_init > 0.0)) throw std::invalid_argument("RLS initialization requires delta > 0");
  return DrjioRlsState{identity_top(m, d),
                       CVector::Zero(d),
                       CVector::Zero(d),
                       CMatrix::Identity(m, m) / delta_init,
                       CMatrix::Identity(d, d) / delta_init,
                       CMatrix::Identity(d, d) / delta_init};
}

void drjio_rls_adapt(DrjioRlsState& state, const Sample& sample, double lambda, std::size_t iteration) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw std::invalid_argument("forgetting factor must lie in (0, 1]");
  const CVector& x = sample.x;
  const CVector& w = state.omega_bar;
  const double inv_lambda = 1.0 / lambda;

  const CVector px = state.p_full * x;
  const CVector k = (inv_lambda * px) / (1.0 + inv_lambda * x.dot(px));
  const CVector qw = state.q_omega * w;
  const CVector t = (inv_lambda * qw) / (1.0 + inv_lambda * w.dot(qw));

  // d* t^H - x^H S_D, a 1 x D row.
  const Eigen::RowVectorXcd s_row = std::conj(sample.d) * t.adjoint() - x.adjoint() * state.s_d;
  state.s_d += k * s_row;

  state.p_full = inv_lambda * (state.p_full - k * px.adjoint());
  state.q_omega = inv_lambda * (state.q_omega - t * qw.adjoint());
  hermitize(state.p_full);
  hermitize(state.q_omega);

  const CVector x_bar = state.s_d.adjoint() * x;
  const CVector phi_x = state.phi_bar * x_bar;
  const CVector k_bar = (inv_lambda * phi_x) / (1.0 + inv_lambda * x_bar.dot(phi_x));
  const Complex e = sample.d - x_bar.dot(w);
  state.psi_bar = w + std::conj(e) * k_bar;
  state.phi_bar = inv_lambda * (state.phi_bar - k_bar * phi_x.adjoint());
  hermitize(state.phi_bar);

  require_finite(state.psi_bar.allFinite() && state.s_d.allFinite() && state.p_full.allFinite() &&
                     state.q_omega.allFinite() && state.phi_bar.allFinite(),
                 "DRJIO-RLS state became non-finite", iteration);
}

CVector combine_reduced(const std::vector<CVector>& psi_bars, const std::vector<double>& weights) {
  return combine(psi_bars, weights);
}

CVector reconstruct(const CMatrix& s_d, const CVector& omega_bar) {
  if (s_d.cols() != omega_bar.size()) throw std::invalid_argument("reconstruct: S_D columns differ from D");
  return s_d * omega_bar;
}

}  // namespace drjio
