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

#include "drjio/topology.hpp"

#include <gtest/gtest.h>

#include <queue>
#include <sstream>

namespace drjio {
namespace {

bool bfs_connected(const Topology& t) {
  std::vector<bool> seen(t.size(), false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop();
    for (std::size_t v = 0; v < t.size(); ++v) {
      if (t.linked(u, v) && !seen[v]) {
        seen[v] = true;
        ++count;
        q.push(v);
      }
    }
  }
  return count == t.size();
}

TEST(MetropolisWeights, SingleNodeIsOne) {
  const CombinationMatrix c = metropolis_weights(Topology::single_node());
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c(0, 0), 1.0);
}

TEST(MetropolisWeights, ThreeNodePath) {
  const Topology path = Topology::from_edges(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(path.degree(0), 2u);
  EXPECT_EQ(path.degree(1), 3u);
  EXPECT_EQ(path.degree(2), 2u);
  const CombinationMatrix c = metropolis_weights(path);
  EXPECT_NEAR(c(0, 1), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(c(1, 0), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(c(1, 2), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(c(2, 1), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(c(0, 0), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(c(2, 2), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(c(1, 1), 1.0 / 3.0, 1e-15);
  EXPECT_EQ(c(0, 2), 0.0);
  EXPECT_EQ(c(2, 0), 0.0);
}

TEST(MetropolisWeights, TwoNodeCompleteGraphIsAllHalves) {
  const CombinationMatrix c = metropolis_weights(Topology::from_edges(2, {{0, 1}}));
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t l = 0; l < 2; ++l) EXPECT_EQ(c(k, l), 0.5);
  }
}

TEST(MetropolisWeights, InvariantsOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 2 + seed % 25;
    const Topology t = random_connected_topology(n, std::min(4.0, n - 0.5), seed);
    const CombinationMatrix c = metropolis_weights(t);
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_NEAR(c.matrix().row(static_cast<Eigen::Index>(k)).sum(), 1.0, 1e-12);
      for (std::size_t l = 0; l < n; ++l) {
        EXPECT_GE(c(k, l), 0.0);
        EXPECT_LE(c(k, l), 1.0);
        EXPECT_EQ(c(k, l) > 0.0, t.linked(k, l)) << "support mismatch at " << k << "," << l;
        if (k != l) EXPECT_EQ(c(k, l), c(l, k));
      }
    }
    const CombinationMatrix again = metropolis_weights(t);
    EXPECT_TRUE(again.matrix() == c.matrix());
  }
}

TEST(Topology, RejectsAsymmetricAdjacency) {
  std::vector<std::vector<bool>> adj = {{true, true}, {false, true}};
  EXPECT_THROW(Topology{adj}, std::invalid_argument);
}

TEST(Topology, RejectsFalseDiagonal) {
  std::vector<std::vector<bool>> adj = {{false, true}, {true, true}};
  EXPECT_THROW(Topology{adj}, std::invalid_argument);
}

TEST(Topology, RejectsDisconnectedGraph) {
  EXPECT_THROW(Topology::from_edges(4, {{0, 1}, {2, 3}}), std::invalid_argument);
}

TEST(Topology, NeighborsIncludeSelfInAscendingOrder) {
  const Topology t = Topology::from_edges(4, {{2, 0}, {2, 3}, {1, 2}});
  EXPECT_EQ(t.neighbors(2), (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(t.neighbors(0), (std::vector<std::size_t>{0, 2}));
}

TEST(CombinationMatrix, RejectsRowsThatDoNotSumToOne) {
  RMatrix w(2, 2);
  w << 0.5, 0.4, 0.5, 0.5;
  EXPECT_THROW(CombinationMatrix{w}, std::invalid_argument);
}

TEST(RandomTopology, SingleNode) {
  const Topology t = random_connected_topology(1, 3.0, 9);
  EXPECT_EQ(t.size(), 1u);
  EXPECT_TRUE(t.linked(0, 0));
}

TEST(RandomTopology, TwentyNodesAreConnected) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Topology t = random_connected_topology(20, 5.0, seed);
    EXPECT_EQ(t.size(), 20u);
    EXPECT_TRUE(bfs_connected(t));
  }
}

TEST(RandomTopology, DeterministicPerSeed) {
  EXPECT_TRUE(random_connected_topology(20, 5.0, 77) == random_connected_topology(20, 5.0, 77));
  EXPECT_FALSE(random_connected_topology(20, 5.0, 77) == random_connected_topology(20, 5.0, 78));
}

TEST(RandomTopology, AverageDegreeTracksTarget) {
  double total = 0.0;
  const int graphs = 40;
  for (int s = 0; s < graphs; ++s) {
    const Topology t = random_connected_topology(30, 4.0, static_cast<std::uint64_t>(s));
    total += 2.0 * static_cast<double>(t.edges().size()) / 30.0;
  }
  // Sampling targets 4 and the spanning-tree repair adds up to 29 more edges,
  // most of them new, which lifts the mean to roughly 5.7.
  EXPECT_GT(total / graphs, 5.0);
  EXPECT_LT(total / graphs, 6.5);
}

TEST(RandomTopology, RejectsInfeasibleDegree) {
  EXPECT_THROW(random_connected_topology(5, 0.0, 1), std::invalid_argument);
  EXPECT_THROW(random_connected_topology(5, 5.0, 1), std::invalid_argument);
  EXPECT_THROW(random_connected_topology(0, 1.0, 1), std::invalid_argument);
}

TEST(EdgeList, RoundTrip) {
  const Topology t = random_connected_topology(12, 3.0, 4);
  std::stringstream io;
  write_edge_list(io, t);
  EXPECT_TRUE(read_edge_list(io) == t);
}

TEST(EdgeList, CommentsAndSelfDeclarations) {
  std::istringstream in("# triangle plus a leaf\n1 2\n2 3  # inline\n\n3 1\n3 4\n4 4\n");
  const Topology t = read_edge_list(in);
  EXPECT_EQ(t.size(), 4u);
  EXPECT_EQ(t.edges().size(), 4u);
  EXPECT_TRUE(t.linked(2, 3));
}

TEST(EdgeList, RejectsMalformedLines) {
  std::istringstream zero_index("0 1\n");
  EXPECT_THROW(read_edge_list(zero_index), std::invalid_argument);
  std::istringstream one_field("1\n");
  EXPECT_THROW(read_edge_list(one_field), std::invalid_argument);
  std::istringstream empty("# nothing\n");
  EXPECT_THROW(read_edge_list(empty), std::invalid_argument);
}

TEST(Ieee14, HasFourteenBusesAndTwentyBranches) {
  const Topology t = ieee14_topology();
  EXPECT_EQ(t.size(), 14u);
  EXPECT_EQ(t.edges().size(), 20u);
  EXPECT_TRUE(t.linked(0, 1));
  EXPECT_TRUE(t.linked(12, 13));
  EXPECT_FALSE(t.linked(0, 13));
  EXPECT_TRUE(bfs_connected(t));
}

}  // namespace
}  // namespace drjio
