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

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "complexity_oracle.hpp"

namespace drjio {
namespace {

TEST(OpCounts, DrjioNlmsExample) {
  const ComplexityReport r = op_counts(CostedAlgorithm::kDrjioNlms, 20, 5, 5);
  EXPECT_EQ(r.mults, 285);
  EXPECT_EQ(r.adds, 11 * 20 + 7 * 5 - 2);
}

TEST(OpCounts, DiffusionNlmsExample) { EXPECT_EQ(op_counts(CostedAlgorithm::kDiffusionNlms, 20, 5, 5).mults, 181); }

TEST(OpCounts, DrjioRlsExample) { EXPECT_EQ(op_counts(CostedAlgorithm::kDrjioRls, 20, 5, 5).mults, 1230); }

TEST(OpCounts, MatchesExpandedPolynomials) {
  for (const auto& row : testing::expanded_count_table()) {
    for (std::int64_t m = 1; m <= 64; m += 3) {
      for (std::int64_t d = 1; d <= m; d += 2) {
        for (std::int64_t nk = 1; nk <= 9; nk += 4) {
          const ComplexityReport r = op_counts(row.algorithm, m, d, nk);
          ASSERT_EQ(r.mults, testing::evaluate(row.mults, m, d, nk)) << to_string(row.algorithm);
          ASSERT_EQ(r.adds, testing::evaluate(row.adds, m, d, nk)) << to_string(row.algorithm);
          ASSERT_GE(r.adds, 0);
        }
      }
    }
  }
}

TEST(OpCounts, RejectsInvalidInput) {
  EXPECT_THROW(op_counts(CostedAlgorithm::kDrjioNlms, 0, 1, 1), std::invalid_argument);
  EXPECT_THROW(op_counts(CostedAlgorithm::kDrjioNlms, 4, 5, 1), std::invalid_argument);
  EXPECT_THROW(op_counts(CostedAlgorithm::kDrjioNlms, 4, 2, 0), std::invalid_argument);
  EXPECT_THROW(parse_costed_algorithm("lms"), std::invalid_argument);
}

TEST(OpCounts, NamesRoundTrip) {
  for (CostedAlgorithm a : kAllCostedAlgorithms) EXPECT_EQ(parse_costed_algorithm(to_string(a)), a);
}

TEST(OpCounts, DrjioNlmsIsOrderDM) {
  for (std::int64_t m = 10; m <= 1000; ++m) {
    for (std::int64_t d : {1, 5, 10}) {
      const double ratio = static_cast<double>(op_counts(CostedAlgorithm::kDrjioNlms, m, d, 5).mults) /
                           static_cast<double>(d * m);
      ASSERT_LE(ratio, 6.0) << "M=" << m << " D=" << d;
    }
  }
}

TEST(ComplexitySweep, LinearTermsOrdered) {
  for (const auto& r : complexity_sweep(20, 400, 5, 5)) {
    if (r.algorithm != CostedAlgorithm::kDrjioNlms) continue;
    EXPECT_LT(op_counts(CostedAlgorithm::kDiffusionNlms, r.m, 5, 5).mults, r.mults);
    EXPECT_LT(r.mults, op_counts(CostedAlgorithm::kDiffusionRls, r.m, 5, 5).mults);
  }
}

TEST(ComplexitySweep, PrincipalSubspaceGrowsCubically) {
  const auto at = [](std::int64_t m) { return op_counts(CostedAlgorithm::kPrincipalSubspace, m, 5, 5).mults; };
  EXPECT_NEAR(static_cast<double>(at(400)) / static_cast<double>(at(200)), 8.0, 0.1);
  for (std::int64_t m = 20; m <= 200; ++m) {
    for (CostedAlgorithm a : {CostedAlgorithm::kDrjioNlms, CostedAlgorithm::kDrjioRls,
                              CostedAlgorithm::kDiffusionNlms, CostedAlgorithm::kDiffusionRls}) {
      ASSERT_GT(at(m), op_counts(a, m, 5, 5).mults) << to_string(a) << " M=" << m;
    }
  }
}

TEST(ComplexitySweep, SinglePointMatchesOpCounts) {
  const auto rows = complexity_sweep(33, 33, 5, 5);
  ASSERT_EQ(rows.size(), kAllCostedAlgorithms.size());
  for (const auto& r : rows) EXPECT_EQ(r, op_counts(r.algorithm, 33, 5, 5));
}

TEST(ComplexitySweep, CsvHeaderAndRows) {
  std::ostringstream out;
  write_complexity_csv(out, complexity_sweep(20, 21, 5, 5));
  const std::string text = out.str();
  EXPECT_EQ(text.rfind("algorithm,M,D,Nk,mults,adds\n", 0), 0u);
  EXPECT_NE(text.find("drjio-nlms,20,5,5,285,"), std::string::npos);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 13);
}

}  // namespace
}  // namespace drjio
