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

#include "drjio/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace drjio {
namespace {

// Reciprocal condition estimate below which an inverse is refused.
constexpr double kSingularRcond = 1e-14;

Eigen::LDLT<CMatrix> checked_ldlt(const CMatrix& a, const char* what, std::size_t cycle) {
  Eigen::LDLT<CMatrix> ldlt(a);
  if (ldlt.info() != Eigen::Success || !(ldlt.rcond() > kSingularRcond)) {
    throw SingularMatrixError(std::string(what) + " is singular", cycle);
  }
  return ldlt;
}

void normalize_phase(CMatrix& phi) {
  for (Eigen::Index j = 0; j < phi.cols(); ++j) {
    Eigen::Index top = 0;
    phi.col(j).cwiseAbs().maxCoeff(&top);
    const Complex pivot = phi(top, j);
    if (std::abs(pivot) > 0.0) phi.col(j) *= std::conj(pivot) / std::abs(pivot);
  }
}

Eigen::Index peak_index(const CVector& v) {
  Eigen::Index top = 0;
  const double peak = v.cwiseAbs().maxCoeff();
  // Lowest index among entries that reach the peak, so ties are stable.
  for (Eigen::Index a = 0; a < v.size(); ++a) {
    if (std::abs(v(a)) >= peak * (1.0 - 1e-12)) {
      top = a;
      break;
    }
  }
  return top;
}

// Orthonormal basis of span(v) built from the projector columns with the
// largest residual norm first, lowest index on ties.
CMatrix canonical_basis(const CMatrix& v) {
  const Eigen::Index m = v.rows();
  const Eigen::Index n = v.cols();
  CMatrix residual = v * v.adjoint();
  CMatrix basis(m, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const RVector norms = residual.colwise().norm();
    const double best = norms.maxCoeff();
    Eigen::Index pick = 0;
    for (Eigen::Index a = 0; a < m; ++a) {
      if (norms(a) >= best * (1.0 - 1e-9)) {
        pick = a;
        break;
      }
    }
    CVector q = residual.col(pick) / norms(pick);
    q -= basis.leftCols(j) * (basis.leftCols(j).adjoint() * q);
    q.normalize();
    basis.col(j) = q;
    residual -= q * (q.adjoint() * residual);
  }
  return basis;
}

}  // namespace

CMatrix ar1_covariance(Complex alpha, Eigen::Index m) {
  CMatrix r(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    Complex v{1.0, 0.0};
    r(a, a) = v;
    for (Eigen::Index b = a + 1; b < m; ++b) {
      v *= alpha;
      r(a, b) = v;
      r(b, a) = std::conj(v);
    }
  }
  return r;
}

MomentModel moments_from_covariance(const CMatrix& r, const CVector& omega0, double noise_var) {
  if (r.rows() != r.cols() || r.rows() != omega0.size()) {
    throw std::invalid_argument("moments: covariance and omega0 dimensions differ");
  }
  MomentModel out;
  out.r = r;
  out.p = r * omega0;
  out.sigma_d2 = omega0.dot(out.p).real() + noise_var;
  return out;
}

MomentModel exact_moments(const NodeSignalModel& model, const CVector& omega0) {
  model.validate();
  return moments_from_covariance(ar1_covariance(model.alpha, model.regressor_len), omega0, model.noise_var);
}

double mse_closed_form(const CVector& p_bar, const CMatrix& r_bar, double sigma_d2) {
  if (r_bar.rows() != r_bar.cols() || r_bar.rows() != p_bar.size()) {
    throw std::invalid_argument("mse_closed_form: dimension mismatch");
  }
  const auto ldlt = checked_ldlt(r_bar, "reduced covariance", 0);
  return sigma_d2 - p_bar.dot(ldlt.solve(p_bar)).real();
}

double full_wiener_mse(const MomentModel& moments) { return mse_closed_form(moments.p, moments.r, moments.sigma_d2); }

FixedPointSolution alt_fixed_point(const MomentModel& moments, Eigen::Index d, const FixedPointOptions& options) {
  const Eigen::Index m = moments.r.rows();
  if (d < 1 || d > m) throw std::invalid_argument("alt_fixed_point requires 1 <= D <= M");
  const double floor = full_wiener_mse(moments);
  const auto r_ldlt = checked_ldlt(moments.r, "input covariance", 0);

  FixedPointSolution sol;
  sol.s_d = identity_top(m, d);
  auto reduce = [&](std::size_t cycle) {
    sol.r_bar = sol.s_d.adjoint() * moments.r * sol.s_d;
    sol.p_bar = sol.s_d.adjoint() * moments.p;
    const auto ldlt = checked_ldlt(sol.r_bar, "reduced covariance R_bar", cycle);
    sol.omega_bar = ldlt.solve(sol.p_bar);
    sol.mse = moments.sigma_d2 - sol.p_bar.dot(sol.omega_bar).real();
    sol.mse_history.push_back(sol.mse);
  };
  reduce(0);
  if (sol.mse <= floor + options.tol) {
    sol.converged = true;
    return sol;
  }

  const CMatrix gamma_term = options.gamma * identity_top(m, d);
  const CMatrix delta_term = options.delta * CMatrix::Identity(d, d);
  for (std::size_t cycle = 1; cycle <= options.max_cycles; ++cycle) {
    const CMatrix p_d = moments.p * sol.omega_bar.adjoint() + gamma_term;
    const CMatrix r_omega = sol.omega_bar * sol.omega_bar.adjoint() + delta_term;
    const auto w_ldlt = checked_ldlt(r_omega, "omega_bar correlation", cycle);
    // S_D = R^-1 P_D R_omega^-1, with R_omega Hermitian.
    sol.s_d = w_ldlt.solve(r_ldlt.solve(p_d).adjoint()).adjoint();
    const double previous = sol.mse;
    reduce(cycle);
    sol.cycles = cycle;
    if (std::abs(previous - sol.mse) < options.tol || sol.mse <= floor + options.tol) {
      sol.converged = true;
      break;
    }
  }
  return sol;
}

EigenDecomp eigen_decomp(const CMatrix& r) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(r);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  EigenDecomp out;
  out.lambda = solver.eigenvalues().reverse();
  out.phi = solver.eigenvectors().rowwise().reverse();
  normalize_phase(out.phi);
  return out;
}

RankDWiener rank_d_wiener(const MomentModel& moments, Eigen::Index d, double tie_tol) {
  const Eigen::Index m = moments.r.rows();
  if (d < 1 || d > m) throw std::invalid_argument("rank_d_wiener requires 1 <= D <= M");
  RankDWiener out;
  out.eig = eigen_decomp(moments.r);
  RVector& lambda = out.eig.lambda;
  CMatrix& phi = out.eig.phi;
  const double scale = std::max(1.0, std::abs(lambda(0)));

  Eigen::Index start = 0;
  while (start < m) {
    Eigen::Index end = start + 1;
    while (end < m && std::abs(lambda(start) - lambda(end)) <= tie_tol * scale) ++end;
    const Eigen::Index size = end - start;
    if (size > 1) {
      CMatrix block = canonical_basis(phi.middleCols(start, size));
      std::vector<Eigen::Index> order(static_cast<std::size_t>(size));
      std::iota(order.begin(), order.end(), Eigen::Index{0});
      std::vector<double> power(order.size());
      std::vector<Eigen::Index> peak(order.size());
      for (Eigen::Index j = 0; j < size; ++j) {
        power[static_cast<std::size_t>(j)] = std::norm(block.col(j).dot(moments.p));
        peak[static_cast<std::size_t>(j)] = peak_index(block.col(j));
      }
      const double power_scale = std::max(1.0, *std::max_element(power.begin(), power.end()));
      std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        const double pa = power[static_cast<std::size_t>(a)];
        const double pb = power[static_cast<std::size_t>(b)];
        if (std::abs(pa - pb) > 1e-12 * power_scale) return pa > pb;
        return peak[static_cast<std::size_t>(a)] < peak[static_cast<std::size_t>(b)];
      });
      const double mean = lambda.segment(start, size).mean();
      for (Eigen::Index j = 0; j < size; ++j) {
        phi.col(start + j) = block.col(order[static_cast<std::size_t>(j)]);
        lambda(start + j) = mean;
      }
      if (start < d && end > d) out.boundary_degenerate = true;
    }
    start = end;
  }
  normalize_phase(phi);

  for (Eigen::Index j = 0; j < d; ++j) {
    if (!(lambda(j) > 0.0)) throw SingularMatrixError("rank-D eigenvalue is not positive", 0);
  }
  const CMatrix phi_d = phi.leftCols(d);
  const CVector coeffs = (phi_d.adjoint() * moments.p).cwiseQuotient(lambda.head(d).cast<Complex>());
  out.omega = phi_d * coeffs;
  out.mse = moments.sigma_d2 - moments.p.dot(out.omega).real();
  return out;
}

RecursionTrajectory deterministic_recursion(const std::vector<RVector>& spectra, const CombinationMatrix& weights,
                                            const std::vector<CVector>& omega_init, std::size_t iters) {
  const std::size_t n = weights.size();
  if (spectra.size() != n || omega_init.size() != n) {
    throw std::invalid_argument("deterministic_recursion: one spectrum and one start vector per node");
  }
  std::vector<RVector> squared(n);
  for (std::size_t l = 0; l < n; ++l) {
    if (spectra[l].size() != omega_init[l].size()) {
      throw std::invalid_argument("deterministic_recursion: spectrum and start vector lengths differ");
    }
    squared[l] = spectra[l].array().square();
  }

  RecursionTrajectory out;
  out.norms.assign(n, std::vector<double>{});
  std::vector<CVector> omega = omega_init;
  for (std::size_t k = 0; k < n; ++k) out.norms[k].push_back(omega[k].norm());

  std::vector<CVector> mapped(n);
  for (std::size_t i = 1; i <= iters; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      const CVector lw = squared[l].cast<Complex>().cwiseProduct(omega[l]);
      const Complex denom = omega[l].dot(lw);
      if (std::abs(denom) == 0.0) {
        throw std::domain_error("deterministic_recursion: zero denominator at node " + std::to_string(l + 1) +
                                ", iteration " + std::to_string(i));
      }
      mapped[l] = lw * (omega[l].squaredNorm() / denom);
    }
    for (std::size_t k = 0; k < n; ++k) {
      CVector next = CVector::Zero(omega[k].size());
      for (std::size_t l = 0; l < n; ++l) {
        if (weights(k, l) != 0.0) next += weights(k, l) * mapped[l];
      }
      omega[k] = std::move(next);
      out.norms[k].push_back(omega[k].norm());
    }
  }
  out.final_omega = std::move(omega);
  return out;
}

RecursionTrajectory deterministic_recursion(const std::vector<MomentModel>& models, const CombinationMatrix& weights,
                                            const std::vector<CVector>& omega_init, std::size_t iters) {
  std::vector<RVector> spectra;
  spectra.reserve(models.size());
  for (const auto& model : models) spectra.push_back(eigen_decomp(model.r).lambda);
  return deterministic_recursion(spectra, weights, omega_init, iters);
}

std::vector<double> recursion_norm_bounds(const std::vector<RVector>& spectra, const CombinationMatrix& weights,
                                          const std::vector<CVector>& omega_init) {
  const std::size_t n = weights.size();
  if (spectra.size() != n || omega_init.size() != n) {
    throw std::invalid_argument("recursion_norm_bounds: one spectrum and one start vector per node");
  }
  std::vector<double> growth(n);
  for (std::size_t l = 0; l < n; ++l) {
    const RVector s = spectra[l].array().square();
    const Eigen::Index m = s.size();
    Eigen::Index r = 1;
    while (r < m && std::abs(s(r) - s(0)) <= 1e-12 * std::max(1.0, s(0))) ++r;
    double factor = 1.0;
    if (r < m) {
      const double head = omega_init[l].head(r).squaredNorm();
      const double tail = omega_init[l].tail(m - r).squaredNorm();
      const double rho = (s(r) / s(r - 1)) * (s(r) / s(r - 1));
      factor = head > 0.0 ? std::exp((tail / head) / (1.0 - rho)) : std::numeric_limits<double>::infinity();
    }
    growth[l] = omega_init[l].norm() * factor;
  }
  std::vector<double> bounds(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) bounds[k] += weights(k, l) * growth[l];
  }
  return bounds;
}

}  // namespace drjio
