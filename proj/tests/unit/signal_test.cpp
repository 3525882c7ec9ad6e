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

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace drjio {
namespace {

NodeSignalModel model(Complex alpha, double noise_var, Eigen::Index m) {
  NodeSignalModel s;
  s.alpha = alpha;
  s.noise_var = noise_var;
  s.regressor_len = m;
  return s;
}

double scalar_variance(Complex alpha, int draws, std::uint64_t seed) {
  Ar1RegressorStream stream(model(alpha, 0.0, 1), seed);
  double power = 0.0;
  for (int i = 0; i < draws; ++i) power += std::norm(stream.next()(0));
  return power / draws;
}

TEST(Ar1Stream, WhiteWhenAlphaIsZero) {
  EXPECT_DOUBLE_EQ(model(0.0, 0.0, 4).innovation_var(), 1.0);
  EXPECT_NEAR(scalar_variance(0.0, 200000, 3), 1.0, 0.01);
}

TEST(Ar1Stream, StationaryVarianceIsOne) { EXPECT_NEAR(scalar_variance(0.5, 1000000, 11), 1.0, 0.01); }

TEST(Ar1Stream, ConsecutiveVectorsShareShiftedEntries) {
  Ar1RegressorStream stream(model(0.3, 0.0, 6), 5);
  const CVector a = stream.next();
  const CVector b = stream.next();
  EXPECT_TRUE(b.tail(5) == a.head(5));
  EXPECT_NE(b(0), a(0));
}

TEST(Ar1Stream, SampleCovarianceMatchesToeplitzForm) {
  const Eigen::Index m = 4;
  const double alpha = 0.5;
  Ar1RegressorStream stream(model(alpha, 0.0, m), 21);
  CMatrix acc = CMatrix::Zero(m, m);
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const CVector& x = stream.next();
    acc += x * x.adjoint();
  }
  acc /= n;
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = 0; b < m; ++b) {
      const double want = std::pow(alpha, std::abs(static_cast<double>(a - b)));
      EXPECT_NEAR(acc(a, b).real(), want, 0.02) << a << "," << b;
      EXPECT_NEAR(acc(a, b).imag(), 0.0, 0.02);
    }
  }
}

TEST(Ar1Stream, IdenticalSeedsAreBitwiseIdentical) {
  Ar1RegressorStream a(model(Complex(0.2, 0.1), 0.0, 5), 99);
  Ar1RegressorStream b(model(Complex(0.2, 0.1), 0.0, 5), 99);
  for (int i = 0; i < 100; ++i) EXPECT_TRUE(a.next() == b.next());
}

TEST(Ar1Stream, RejectsUnstableAlpha) {
  EXPECT_THROW(Ar1RegressorStream(model(1.0, 0.0, 3), 1), std::invalid_argument);
  EXPECT_THROW(Ar1RegressorStream(model(Complex(0.8, 0.8), 0.0, 3), 1), std::invalid_argument);
}

TEST(Measure, UnitVectorWithoutNoise) {
  Engine e = make_engine({1});
  CVector w = CVector::Zero(4);
  w(0) = 1.0;
  CVector x = CVector::Zero(4);
  x(0) = 1.0;
  EXPECT_EQ(measure(w, x, 0.0, e), Complex(1.0, 0.0));
}

TEST(Measure, ConjugatesTheParameter) {
  Engine e = make_engine({1});
  CVector w = CVector::Zero(3);
  w(0) = Complex(0.0, 1.0);
  CVector x = CVector::Zero(3);
  x(0) = 1.0;
  EXPECT_EQ(measure(w, x, 0.0, e), Complex(0.0, -1.0));
}

TEST(Measure, NoiseVarianceMatches) {
  Engine e = make_engine({8});
  const CVector w = CVector::Zero(2);
  const CVector x = CVector::Ones(2);
  double power = 0.0;
  const int n = 1000000;
  for (int i = 0; i < n; ++i) power += std::norm(measure(w, x, 0.001, e));
  EXPECT_NEAR(power / n, 0.001, 0.001 * 0.01);
}

TEST(Measure, NoiseFreeIsLinearInX) {
  Engine e = make_engine({2});
  Engine g = make_engine({3});
  const CVector w = testing::random_vector(6, g);
  const CVector x1 = testing::random_vector(6, g);
  const CVector x2 = testing::random_vector(6, g);
  const Complex c(0.7, -1.3);
  const Complex lhs = measure(w, c * x1 + x2, 0.0, e);
  const Complex rhs = c * measure(w, x1, 0.0, e) + measure(w, x2, 0.0, e);
  EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12);
}

TEST(MakeParameter, SparseHasExactSupport) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ParameterVector p = make_parameter(ParameterKind::kSparse, 20, 3, seed);
    EXPECT_EQ((p.omega0.array() != Complex(0.0, 0.0)).count(), 3);
  }
}

TEST(MakeParameter, AllOnes) {
  const ParameterVector p = make_parameter(ParameterKind::kAllOnes, 42, 1, 0);
  ASSERT_EQ(p.omega0.size(), 42);
  EXPECT_TRUE(p.omega0 == CVector::Ones(42));
}

TEST(MakeParameter, FullRankHasNoForcedZeros) {
  const ParameterVector p = make_parameter(ParameterKind::kFullRank, 16, 16, 4);
  EXPECT_EQ((p.omega0.array() != Complex(0.0, 0.0)).count(), 16);
}

TEST(MakeParameter, RejectsRankAboveDimension) {
  EXPECT_THROW(make_parameter(ParameterKind::kSparse, 5, 6, 1), std::invalid_argument);
}

TEST(SmartGrid, ModelShape) {
  const SmartGridModel g = smartgrid_models(14, 3, 0.001);
  EXPECT_EQ(g.topology.size(), 14u);
  ASSERT_EQ(g.nodes.size(), 14u);
  EXPECT_EQ(g.omega0.omega0.size(), 42);
  EXPECT_TRUE(g.omega0.omega0 == CVector::Ones(42));
  for (const auto& bus : g.nodes) {
    EXPECT_EQ(bus.noise_var, 0.001);
    EXPECT_EQ(bus.regressor_len, 42);
    EXPECT_EQ(bus.alpha, Complex(0.0, 0.0));
  }
}

TEST(NodeStream, MeasurementFollowsModel) {
  const NodeSignalModel m = model(0.4, 0.0, 5);
  Engine g = make_engine({6});
  const CVector w = testing::random_vector(5, g);
  NodeStream stream(m, w, make_engine({1, 1}), make_engine({1, 2}));
  for (int i = 0; i < 10; ++i) {
    const Sample& s = stream.next();
    EXPECT_NEAR(std::abs(s.d - w.dot(s.x)), 0.0, 1e-14);
  }
}

}  // namespace
}  // namespace drjio
