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

#include "drjio/signal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace drjio {

std::string to_string(ParameterKind kind) {
  switch (kind) {
    case ParameterKind::kFullRank:
      return "full-rank";
    case ParameterKind::kSparse:
      return "sparse";
    case ParameterKind::kAllOnes:
      return "all-ones";
  }
  return "unknown";
}

ParameterKind parse_parameter_kind(const std::string& name) {
  if (name == "full-rank") return ParameterKind::kFullRank;
  if (name == "sparse") return ParameterKind::kSparse;
  if (name == "all-ones") return ParameterKind::kAllOnes;
  throw std::invalid_argument("unknown parameter kind '" + name + "' (expected full-rank, sparse or all-ones)");
}

ParameterVector make_parameter(ParameterKind kind, Eigen::Index m, Eigen::Index d, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("parameter length M must be at least 1");
  ParameterVector out;
  out.kind = kind;
  if (kind == ParameterKind::kAllOnes) {
    out.omega0 = CVector::Ones(m);
    return out;
  }
  if (d < 1 || d > m) throw std::invalid_argument("parameter requires 1 <= D <= M");

  Engine engine = make_engine({seed, static_cast<std::uint64_t>(StreamRole::kParameter)});
  ComplexGaussian gauss(1.0);
  if (kind == ParameterKind::kFullRank) {
    out.omega0.resize(m);
    for (Eigen::Index a = 0; a < m; ++a) out.omega0(a) = gauss(engine);
    return out;
  }

  std::vector<Eigen::Index> positions(static_cast<std::size_t>(m));
  std::iota(positions.begin(), positions.end(), Eigen::Index{0});
  std::shuffle(positions.begin(), positions.end(), engine);
  positions.resize(static_cast<std::size_t>(d));
  std::sort(positions.begin(), positions.end());
  out.omega0 = CVector::Zero(m);
  for (Eigen::Index a : positions) {
    Complex z = gauss(engine);
    // A zero draw has probability zero, but the support size is a contract.
    while (z == Complex{0.0, 0.0}) z = gauss(engine);
    out.omega0(a) = z;
  }
  return out;
}

void NodeSignalModel::validate() const {
  if (!(std::abs(alpha) < 1.0)) throw std::invalid_argument("AR(1) coefficient must satisfy |alpha| < 1");
  if (!(noise_var >= 0.0)) throw std::invalid_argument("noise variance must be nonnegative");
  if (regressor_len < 1) throw std::invalid_argument("regressor length must be at least 1");
}

namespace {

double checked_innovation_var(const NodeSignalModel& model) {
  model.validate();
  return model.innovation_var();
}

}  // namespace

Ar1RegressorStream::Ar1RegressorStream(const NodeSignalModel& model, Engine engine)
    : alpha_(model.alpha), engine_(std::move(engine)), innovation_(checked_innovation_var(model)) {
  reg_ = CVector::Zero(model.regressor_len);
  const Eigen::Index warmup = 10 * model.regressor_len;
  for (Eigen::Index i = 0; i < warmup; ++i) last_ = step();
  // Fill the register with the M most recent warm-up values.
  for (Eigen::Index a = model.regressor_len - 1; a >= 0; --a) {
    last_ = step();
    reg_(a) = last_;
  }
}

Ar1RegressorStream::Ar1RegressorStream(const NodeSignalModel& model, std::uint64_t seed)
    : Ar1RegressorStream(model, make_engine({seed, static_cast<std::uint64_t>(StreamRole::kRegressor)})) {}

Complex Ar1RegressorStream::step() { return innovation_(engine_) + alpha_ * last_; }

const CVector& Ar1RegressorStream::next() {
  const Eigen::Index m = reg_.size();
  for (Eigen::Index a = m - 1; a > 0; --a) reg_(a) = reg_(a - 1);
  last_ = step();
  reg_(0) = last_;
  return reg_;
}

Complex measure(const CVector& omega0, const CVector& x, double noise_var, Engine& engine) {
  if (omega0.size() != x.size()) throw std::invalid_argument("measure: omega0 and x differ in length");
  const Complex clean = omega0.dot(x);  // Eigen's dot conjugates the left operand.
  if (noise_var == 0.0) return clean;
  ComplexGaussian noise(noise_var);
  return clean + noise(engine);
}

NodeStream::NodeStream(const NodeSignalModel& model, const CVector& omega0, Engine regressor_engine,
                       Engine noise_engine)
    : model_(model),
      omega0_(omega0),
      regressors_(model, std::move(regressor_engine)),
      noise_engine_(std::move(noise_engine)) {
  if (omega0_.size() != model_.regressor_len) {
    throw std::invalid_argument("node stream: omega0 length differs from regressor length");
  }
}

const Sample& NodeStream::next() {
  sample_.x = regressors_.next();
  sample_.d = measure(omega0_, sample_.x, model_.noise_var, noise_engine_);
  return sample_;
}

SmartGridModel smartgrid_models(std::size_t n_buses, std::size_t users_per_bus, double noise_var) {
  Topology grid = ieee14_topology();
  if (n_buses != grid.size()) throw std::invalid_argument("the embedded grid has 14 buses");
  if (users_per_bus < 1) throw std::invalid_argument("users_per_bus must be at least 1");
  const auto m = static_cast<Eigen::Index>(n_buses * users_per_bus);
  NodeSignalModel bus;
  bus.alpha = 0.0;
  bus.noise_var = noise_var;
  bus.regressor_len = m;
  bus.validate();
  return SmartGridModel{std::vector<NodeSignalModel>(n_buses, bus),
                        make_parameter(ParameterKind::kAllOnes, m, m, 0), std::move(grid)};
}

}  // namespace drjio
