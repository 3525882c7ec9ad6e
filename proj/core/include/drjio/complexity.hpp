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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace drjio {

enum class CostedAlgorithm {
  kDrjioNlms,
  kDrjioRls,
  kDiffusionNlms,
  kDiffusionRls,
  kKrylovNlms,
  kPrincipalSubspace,
};

inline constexpr std::array<CostedAlgorithm, 6> kAllCostedAlgorithms = {
    CostedAlgorithm::kDrjioNlms,    CostedAlgorithm::kDrjioRls,   CostedAlgorithm::kDiffusionNlms,
    CostedAlgorithm::kDiffusionRls, CostedAlgorithm::kKrylovNlms, CostedAlgorithm::kPrincipalSubspace,
};

std::string to_string(CostedAlgorithm algorithm);
CostedAlgorithm parse_costed_algorithm(const std::string& name);

// Per-iteration, per-node multiplication and addition counts.
struct ComplexityReport {
  CostedAlgorithm algorithm = CostedAlgorithm::kDrjioNlms;
  std::int64_t m = 0;
  std::int64_t d = 0;
  std::int64_t nk = 0;
  std::int64_t mults = 0;
  std::int64_t adds = 0;

  bool operator==(const ComplexityReport&) const = default;
};

// Exact closed-form counts. Requires m >= 1, 1 <= d <= m and nk >= 1.
ComplexityReport op_counts(CostedAlgorithm algorithm, std::int64_t m, std::int64_t d, std::int64_t nk);

// One row per algorithm for every M in [m_lo, m_hi] (step m_step).
std::vector<ComplexityReport> complexity_sweep(std::int64_t m_lo, std::int64_t m_hi, std::int64_t d, std::int64_t nk,
                                               std::int64_t m_step = 1);

// CSV with header algorithm,M,D,Nk,mults,adds.
void write_complexity_csv(std::ostream& out, const std::vector<ComplexityReport>& rows);

}  // namespace drjio
