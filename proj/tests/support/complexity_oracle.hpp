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

#include <cstdint>
#include <vector>

#include "drjio/complexity.hpp"

namespace drjio::testing {

// One monomial coef * M^m * D^d * Nk^n of an expanded operation count.
struct Monomial {
  std::int64_t coef;
  int m;
  int d;
  int n;
};

struct ExpandedCounts {
  CostedAlgorithm algorithm;
  std::vector<Monomial> mults;
  std::vector<Monomial> adds;
};

// The per-iteration counts multiplied out by hand into monomials.
inline const std::vector<ExpandedCounts>& expanded_count_table() {
  static const std::vector<ExpandedCounts> table = {
      {CostedAlgorithm::kDrjioNlms,
       {{2, 1, 1, 0}, {2, 1, 0, 0}, {3, 0, 1, 0}, {1, 0, 1, 1}, {5, 0, 0, 0}},
       {{2, 1, 1, 0}, {1, 1, 0, 0}, {2, 0, 1, 0}, {1, 0, 1, 1}, {-2, 0, 0, 0}}},
      {CostedAlgorithm::kDrjioRls,
       {{2, 2, 0, 0}, {3, 1, 0, 0}, {2, 1, 1, 0}, {4, 0, 2, 0}, {9, 0, 1, 0}, {1, 0, 1, 1}},
       {{2, 2, 0, 0}, {2, 1, 1, 0}, {4, 0, 2, 0}, {2, 0, 1, 0}, {1, 0, 1, 1}}},
      {CostedAlgorithm::kDiffusionNlms,
       {{4, 1, 0, 0}, {1, 1, 0, 1}, {1, 0, 0, 0}},
       {{5, 1, 0, 0}, {1, 1, 0, 1}, {-1, 0, 0, 0}}},
      {CostedAlgorithm::kDiffusionRls,
       {{4, 2, 0, 0}, {12, 1, 0, 0}, {1, 1, 0, 1}, {-1, 0, 0, 0}},
       {{4, 2, 0, 0}, {16, 1, 0, 0}, {1, 1, 0, 1}, {1, 0, 0, 0}}},
      {CostedAlgorithm::kKrylovNlms,
       {{6, 2, 1, 0}, {4, 1, 0, 0}, {5, 0, 1, 0}, {1, 0, 1, 1}},
       {{6, 2, 1, 0}, {2, 1, 0, 0}, {2, 0, 1, 0}, {1, 0, 1, 1}}},
      {CostedAlgorithm::kPrincipalSubspace,
       {{1, 3, 0, 0}, {2, 1, 1, 0}, {4, 1, 0, 0}, {3, 0, 1, 0}, {1, 0, 1, 1}, {4, 0, 0, 0}},
       {{1, 3, 0, 0}, {1, 1, 1, 0}, {1, 1, 0, 0}, {2, 0, 1, 0}, {1, 0, 1, 1}, {-1, 0, 0, 0}}},
  };
  return table;
}

inline std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

inline std::int64_t evaluate(const std::vector<Monomial>& poly, std::int64_t m, std::int64_t d, std::int64_t nk) {
  std::int64_t total = 0;
  for (const auto& t : poly) total += t.coef * ipow(m, t.m) * ipow(d, t.d) * ipow(nk, t.n);
  return total;
}

}  // namespace drjio::testing
