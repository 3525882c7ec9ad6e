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

#include "drjio/complexity.hpp"

#include <ostream>
#include <stdexcept>

namespace drjio {

std::string to_string(CostedAlgorithm algorithm) {
  switch (algorithm) {
    case CostedAlgorithm::kDrjioNlms:
      return "drjio-nlms";
    case CostedAlgorithm::kDrjioRls:
      return "drjio-rls";
    case CostedAlgorithm::kDiffusionNlms:
      return "dnlms";
    case CostedAlgorithm::kDiffusionRls:
      return "drls";
    case CostedAlgorithm::kKrylovNlms:
      return "krylov-nlms";
    case CostedAlgorithm::kPrincipalSubspace:
      return "principal-subspace";
  }
  return "unknown";
}

CostedAlgorithm parse_costed_algorithm(const std::string& name) {
  for (CostedAlgorithm a : kAllCostedAlgorithms) {
    if (to_string(a) == name) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

ComplexityReport op_counts(CostedAlgorithm algorithm, std::int64_t m, std::int64_t d, std::int64_t nk) {
  if (m < 1) throw std::invalid_argument("op_counts requires M >= 1");
  if (d < 1 || d > m) throw std::invalid_argument("op_counts requires 1 <= D <= M");
  if (nk < 1) throw std::invalid_argument("op_counts requires |N_k| >= 1");

  ComplexityReport r{algorithm, m, d, nk, 0, 0};
  switch (algorithm) {
    case CostedAlgorithm::kDrjioNlms:
      r.mults = 2 * (d + 1) * m + (3 + nk) * d + 5;
      r.adds = (2 * d + 1) * m + (2 + nk) * d - 2;
      break;
    case CostedAlgorithm::kDrjioRls:
      r.mults = 2 * m * m + (3 + 2 * d) * m + 4 * d * d + (9 + nk) * d;
      r.adds = 2 * m * m + 2 * d * m + 4 * d * d + (2 + nk) * d;
      break;
    case CostedAlgorithm::kDiffusionNlms:
      r.mults = (4 + nk) * m + 1;
      r.adds = (5 + nk) * m - 1;
      break;
    case CostedAlgorithm::kDiffusionRls:
      r.mults = 4 * m * m + (12 + nk) * m - 1;
      r.adds = 4 * m * m + (16 + nk) * m + 1;
      break;
    case CostedAlgorithm::kKrylovNlms:
      r.mults = 6 * d * m * m + 4 * m + (5 + nk) * d;
      r.adds = 6 * d * m * m + 2 * m + (2 + nk) * d;
      break;
    case CostedAlgorithm::kPrincipalSubspace:
      r.mults = m * m * m + 2 * (d + 2) * m + (3 + nk) * d + 4;
      r.adds = m * m * m + (d + 1) * m + (2 + nk) * d - 1;
      break;
    default:
      throw std::invalid_argument("unknown algorithm");
  }
  return r;
}

std::vector<ComplexityReport> complexity_sweep(std::int64_t m_lo, std::int64_t m_hi, std::int64_t d, std::int64_t nk,
                                               std::int64_t m_step) {
  if (m_step < 1 || m_lo > m_hi) throw std::invalid_argument("complexity_sweep: empty or invalid M range");
  std::vector<ComplexityReport> rows;
  for (std::int64_t m = m_lo; m <= m_hi; m += m_step) {
    for (CostedAlgorithm a : kAllCostedAlgorithms) rows.push_back(op_counts(a, m, d, nk));
  }
  return rows;
}

void write_complexity_csv(std::ostream& out, const std::vector<ComplexityReport>& rows) {
  out << "algorithm,M,D,Nk,mults,adds\n";
  for (const auto& r : rows) {
    out << to_string(r.algorithm) << ',' << r.m << ',' << r.d << ',' << r.nk << ',' << r.mults << ',' << r.adds
        << '\n';
  }
}

}  // namespace drjio
