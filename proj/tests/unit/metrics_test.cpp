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

#include <gtest/gtest.h>

#include "drjio/signal.hpp"
#include "test_support.hpp"

namespace drjio {
namespace {

TEST(RecordError, ExactEstimateWithoutNoiseIsZero) {
  Engine g = make_engine({1});
  const CVector w0 = testing::random_vector(5, g);
  const CVector x = testing::random_vector(5, g);
  EXPECT_NEAR(record_error(w0, Sample{x, w0.dot(x)}), 0.0, 1e-28);
}

TEST(RecordError, ZeroEstimateGivesMeasurementPower) {
  const Sample s{CVector::Ones(3), Complex(3.0, 4.0)};
  EXPECT_DOUBLE_EQ(record_error(CVector::Zero(3), s), 25.0);
}

TEST(RecordError, NoiseFloorMonteCarlo) {
  Engine g = make_engine({2});
  const CVector w0 = testing::random_vector(4, g);
  NodeSignalModel model;
  model.alpha = 0.3;
  model.noise_var = 0.001;
  model.regressor_len = 4;
  NodeStream stream(model, w0, make_engine({3, 1}), make_engine({3, 2}));
  double acc = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) acc += record_error(w0, stream.next());
  EXPECT_NEAR(acc / n, 0.001, 0.001 * 0.02);
}

TEST(AverageTraces, SingleTraceIsIdentity) {
  const MseTrace t{{1.0, 0.5, 0.25}, 1, "a", "s"};
  EXPECT_EQ(average_traces({t}).per_iteration, t.per_iteration);
}

TEST(AverageTraces, WeightsByRunCount) {
  const MseTrace a{{1.0, 2.0}, 1, "a", "s"};
  const MseTrace b{{4.0, 8.0}, 3, "a", "s"};
  const MseTrace avg = average_traces({a, b});
  EXPECT_EQ(avg.runs, 4u);
  EXPECT_DOUBLE_EQ(avg.per_iteration[0], (1.0 + 12.0) / 4.0);
  EXPECT_DOUBLE_EQ(avg.per_iteration[1], (2.0 + 24.0) / 4.0);
}

TEST(AverageTraces, IsLinear) {
  const std::vector<MseTrace> base = {{{0.3, 0.1}, 1, "", ""}, {{0.5, 0.7}, 1, "", ""}};
  std::vector<MseTrace> scaled = base;
  for (auto& t : scaled) {
    for (double& v : t.per_iteration) v *= 2.5;
  }
  const MseTrace a = average_traces(base);
  const MseTrace b = average_traces(scaled);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_NEAR(b.per_iteration[i], 2.5 * a.per_iteration[i], 1e-15);
}

TEST(AverageTraces, RejectsEmptyOrRagged) {
  EXPECT_THROW(average_traces({}), std::invalid_argument);
  EXPECT_THROW(average_traces({{{1.0}, 1, "", ""}, {{1.0, 2.0}, 1, "", ""}}), std::invalid_argument);
}

TEST(ToDb, ConstantTrace) {
  const MseTrace t{std::vector<double>(10, 0.001), 1, "", ""};
  for (double v : to_db(t)) EXPECT_NEAR(v, -30.0, 1e-12);
}

TEST(ToDb, ZeroMapsToFloorAndPositiveOrderIsKept) {
  EXPECT_EQ(to_db(0.0), kDbFloor);
  EXPECT_LT(to_db(1e-20), to_db(1e-19));
  EXPECT_THROW(to_db(-1.0), std::invalid_argument);
}

TEST(IterationsToThreshold, Bounds) {
  const MseTrace t{{1.0, 0.1, 0.01, 0.001}, 1, "", ""};
  EXPECT_EQ(iterations_to_threshold(t, 10.0), 0u);
  EXPECT_EQ(iterations_to_threshold(t, -15.0), 2u);
  EXPECT_EQ(iterations_to_threshold(t, -20.0), 2u);
  EXPECT_FALSE(iterations_to_threshold(t, -40.0).has_value());
  EXPECT_THROW(iterations_to_threshold(MseTrace{}, 0.0), std::invalid_argument);
}

}  // namespace
}  // namespace drjio
