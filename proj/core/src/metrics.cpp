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

#include "drjio/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace drjio {

double record_error(const CVector& omega_hat, const Sample& sample) {
  if (omega_hat.size() != sample.x.size()) throw std::invalid_argument("record_error: dimension mismatch");
  return std::norm(sample.d - omega_hat.dot(sample.x));
}

MseTrace average_traces(const std::vector<MseTrace>& traces) {
  if (traces.empty()) throw std::invalid_argument("average_traces: no traces");
  const std::size_t len = traces.front().per_iteration.size();
  MseTrace out;
  out.algorithm = traces.front().algorithm;
  out.scenario = traces.front().scenario;
  out.runs = 0;
  out.per_iteration.assign(len, 0.0);
  for (const auto& t : traces) {
    if (t.per_iteration.size() != len) throw std::invalid_argument("average_traces: traces differ in length");
    if (t.runs == 0) throw std::invalid_argument("average_traces: trace with zero runs");
    for (std::size_t i = 0; i < len; ++i) out.per_iteration[i] += static_cast<double>(t.runs) * t.per_iteration[i];
    out.runs += t.runs;
  }
  for (double& v : out.per_iteration) v /= static_cast<double>(out.runs);
  return out;
}

double to_db(double value) {
  if (value < 0.0) throw std::invalid_argument("to_db: negative power");
  if (value == 0.0) return kDbFloor;
  return 10.0 * std::log10(value);
}

std::vector<double> to_db(const MseTrace& trace) {
  std::vector<double> out;
  out.reserve(trace.per_iteration.size());
  for (double v : trace.per_iteration) out.push_back(to_db(v));
  return out;
}

std::optional<std::size_t> iterations_to_threshold(const MseTrace& trace, double threshold_db) {
  if (trace.per_iteration.empty()) throw std::invalid_argument("iterations_to_threshold: empty trace");
  for (std::size_t i = 0; i < trace.per_iteration.size(); ++i) {
    if (to_db(trace.per_iteration[i]) <= threshold_db) return i;
  }
  return std::nullopt;
}

}  // namespace drjio
