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
#include <optional>
#include <string>
#include <vector>

#include "drjio/signal.hpp"
#include "drjio/types.hpp"

namespace drjio {

// Network-average squared error per iteration, averaged over `runs`.
struct MseTrace {
  std::vector<double> per_iteration;
  std::size_t runs = 1;
  std::string algorithm;
  std::string scenario;
};

// dB value reported for an exact zero.
inline constexpr double kDbFloor = -300.0;

// |d - omega_hat^H x|^2
double record_error(const CVector& omega_hat, const Sample& sample);

// Pointwise mean weighted by each trace's run count. Throws
// std::invalid_argument for an empty list or unequal lengths.
MseTrace average_traces(const std::vector<MseTrace>& traces);

double to_db(double value);
std::vector<double> to_db(const MseTrace& trace);

// First zero-based index whose dB value is at or below threshold_db.
std::optional<std::size_t> iterations_to_threshold(const MseTrace& trace, double threshold_db);

}  // namespace drjio
