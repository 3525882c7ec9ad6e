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
#include <vector>

#include "drjio/signal.hpp"
#include "drjio/types.hpp"

namespace drjio {

// Step sizes and regularizers of the low-rank NLMS recursion.
//
// `eps` guards the mu normalization x^H x. `eta_eps` guards the eta
// normalization (omega_bar^H omega_bar)(x^H x), which is exactly zero at the
// first iteration because omega_bar starts at zero; a guard of the same size
// as `eps` turns the first S_D step into a blow-up, so it is kept separate.
struct DrjioNlmsHyper {
  double mu0 = 0.15;
  double eta0 = 0.5;
  double gamma = 0.02;
  double delta = 0.01;
  double eps = 1e-8;
  double eta_eps = 1.0;

  // Throws std::invalid_argument when a step scale is not positive or a
  // regularizer or guard is negative. eta0 = 0 is accepted to pin S_D.
  void validate() const;
};

struct DrjioNlmsState {
  CMatrix s_d;
  CVector omega_bar;
  CVector psi_bar;

  // S_D = I_{M,D}, omega_bar = psi_bar = 0.
  static DrjioNlmsState initial(Eigen::Index m, Eigen::Index d);
};

// One adaptation step. With x_bar = S_D^H x and e = d - omega_bar^H x_bar:
//   psi_bar = omega_bar + mu e* x_bar,               mu = mu0 / (x^H x + eps)
//   S_D    += eta e* x omega_bar^H
//             + eta (gamma d* I_{M,D} - delta x x^H S_D),
//   eta = eta0 / ((omega_bar^H omega_bar)(x^H x) + eta_eps).
// Throws DivergenceError on a non-finite result.
void drjio_nlms_adapt(DrjioNlmsState& state, const Sample& sample, const DrjioNlmsHyper& hyper,
                      std::size_t iteration = 0);

struct DrjioRlsState {
  CMatrix s_d;
  CVector omega_bar;
  CVector psi_bar;
  CMatrix p_full;   // inverse of the exponentially weighted input correlation
  CMatrix q_omega;  // inverse of the weighted omega_bar outer-product sum
  CMatrix phi_bar;  // inverse of the weighted reduced-input correlation

  // S_D = I_{M,D}, omega_bar = 0, P = I_M / delta, Q = Phi_bar = I_D / delta.
  static DrjioRlsState initial(Eigen::Index m, Eigen::Index d, double delta_init);
};

// One adaptation step in the published order:
//   k = P x / (lambda + x^H P x),  t = Q w / (lambda + w^H Q w)   (w = omega_bar)
//   S_D += k (d* t^H - x^H S_D)
//   P = (P - k x^H P) / lambda,    Q = (Q - t w^H Q) / lambda
//   x_bar = S_D^H x with the new S_D
//   k_bar = Phi x_bar / (lambda + x_bar^H Phi x_bar)
//   psi_bar = w + k_bar conj(d - x_bar^H w),  Phi = (Phi - k_bar x_bar^H Phi) / lambda
// The three inverse matrices are Hermitian-symmetrized after each update.
// Throws DivergenceError on a non-finite result.
void drjio_rls_adapt(DrjioRlsState& state, const Sample& sample, double lambda, std::size_t iteration = 0);

// omega_bar = sum_l c_kl psi_bar_l.
CVector combine_reduced(const std::vector<CVector>& psi_bars, const std::vector<double>& weights);

// Rank-D reconstruction omega = S_D omega_bar.
CVector reconstruct(const CMatrix& s_d, const CVector& omega_bar);

}  // namespace drjio
