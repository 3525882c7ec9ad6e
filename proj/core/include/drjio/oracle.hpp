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
#include <stdexcept>
#include <string>
#include <vector>

#include "drjio/signal.hpp"
#include "drjio/topology.hpp"
#include "drjio/types.hpp"

namespace drjio {

// Exact second-order statistics of one node.
struct MomentModel {
  CMatrix r;  // E[x x^H]
  CVector p;  // E[x d*]
  double sigma_d2 = 0.0;
};

// Raised when a matrix that must be inverted is numerically singular.
class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(const std::string& what, std::size_t cycle)
      : std::runtime_error(what + " (cycle " + std::to_string(cycle) + ")"), cycle_(cycle) {}

  std::size_t cycle() const noexcept { return cycle_; }

 private:
  std::size_t cycle_;
};

// AR(1) Toeplitz covariance R(a,b) = alpha^(b-a) for b >= a and its
// conjugate below the diagonal; p = R omega0, sigma_d^2 = omega0^H R omega0 + noise.
CMatrix ar1_covariance(Complex alpha, Eigen::Index m);
MomentModel exact_moments(const NodeSignalModel& model, const CVector& omega0);
MomentModel moments_from_covariance(const CMatrix& r, const CVector& omega0, double noise_var);

// sigma_d^2 - p_bar^H R_bar^-1 p_bar. Throws SingularMatrixError.
double mse_closed_form(const CVector& p_bar, const CMatrix& r_bar, double sigma_d2);

// sigma_d^2 - p^H R^-1 p, the floor no estimator can go below.
double full_wiener_mse(const MomentModel& moments);

struct FixedPointOptions {
  double gamma = 0.02;
  double delta = 0.01;
  std::size_t max_cycles = 200;
  double tol = 1e-10;
};

struct FixedPointSolution {
  CMatrix s_d;
  CVector omega_bar;
  CMatrix r_bar;
  CVector p_bar;
  double mse = 0.0;
  std::size_t cycles = 0;
  bool converged = false;
  std::vector<double> mse_history;  // entry 0 is the initialization
};

// Alternates
//   S_D = R^-1 (p omega_bar^H + gamma I_{M,D}) (omega_bar omega_bar^H + delta I)^-1
//   omega_bar = R_bar^-1 p_bar,  R_bar = S_D^H R S_D,  p_bar = S_D^H p
// starting from S_D = I_{M,D}. Stops when the MSE changes by less than tol,
// when it is within tol of the full Wiener MSE, or after max_cycles.
// Throws SingularMatrixError naming the cycle of a singular inverse.
FixedPointSolution alt_fixed_point(const MomentModel& moments, Eigen::Index d, const FixedPointOptions& options = {});

// Unitary eigenvectors with descending eigenvalues. Each column is scaled so
// its largest-magnitude entry is real and positive.
struct EigenDecomp {
  CMatrix phi;
  RVector lambda;
};

EigenDecomp eigen_decomp(const CMatrix& r);

struct RankDWiener {
  CVector omega;
  double mse = 0.0;
  EigenDecomp eig;                    // ordering after the tie-break
  bool boundary_degenerate = false;  // lambda_D and lambda_{D+1} coincide
};

// omega = Phi_D Lambda_D^-1 Phi_D^H p. Inside a cluster of equal eigenvalues
// the basis is made canonical (pivoted Gram-Schmidt of the cluster projector,
// which yields coordinate vectors whenever the cluster spans coordinates) and
// ordered by captured power |phi^H p|^2, then by the index of each vector's
// largest-magnitude entry.
RankDWiener rank_d_wiener(const MomentModel& moments, Eigen::Index d, double tie_tol = 1e-10);

// Deterministic network recursion in each node's eigen-coordinates:
//   omega_k(i) = sum_l c_kl L_l omega_l (omega_l^H omega_l) / (omega_l^H L_l omega_l)
// with L_l = diag(lambda_l)^2 and lambda_l in descending order.
struct RecursionTrajectory {
  std::vector<std::vector<double>> norms;  // norms[k][i], i = 0..iters
  std::vector<CVector> final_omega;
};

RecursionTrajectory deterministic_recursion(const std::vector<RVector>& spectra, const CombinationMatrix& weights,
                                            const std::vector<CVector>& omega_init, std::size_t iters);
RecursionTrajectory deterministic_recursion(const std::vector<MomentModel>& models, const CombinationMatrix& weights,
                                            const std::vector<CVector>& omega_init, std::size_t iters);

// Upper bound on lim ||omega_k(i)||:
//   sum_l c_kl ||omega_l(0)|| exp(g_l / (1 - rho_l)),
// g_l the energy of omega_l(0) outside the top eigenvalue cluster divided by
// the energy inside it, rho_l = (s_{r+1} / s_r)^2 with s_j the j-th largest
// entry of lambda_l^2 and r the multiplicity of the largest one.
std::vector<double> recursion_norm_bounds(const std::vector<RVector>& spectra, const CombinationMatrix& weights,
                                          const std::vector<CVector>& omega_init);

}  // namespace drjio
