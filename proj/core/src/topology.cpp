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

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>

#include "drjio/rng.hpp"

namespace drjio {
namespace {

bool is_connected(const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t visited = 1;
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop();
    for (std::size_t v = 0; v < n; ++v) {
      if (adj[u][v] && !seen[v]) {
        seen[v] = true;
        ++visited;
        frontier.push(v);
      }
    }
  }
  return visited == n;
}

}  // namespace

Topology::Topology(std::vector<std::vector<bool>> adjacency) : adjacency_(std::move(adjacency)) {
  const std::size_t n = adjacency_.size();
  if (n == 0) throw std::invalid_argument("topology must have at least one node");
  for (std::size_t k = 0; k < n; ++k) {
    if (adjacency_[k].size() != n) throw std::invalid_argument("adjacency must be square");
    if (!adjacency_[k][k]) {
      throw std::invalid_argument("adjacency diagonal must be true (node " + std::to_string(k + 1) + ")");
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      if (adjacency_[k][l] != adjacency_[l][k]) {
        throw std::invalid_argument("adjacency is not symmetric at (" + std::to_string(k + 1) + "," +
                                    std::to_string(l + 1) + ")");
      }
    }
  }
  if (!is_connected(adjacency_)) throw std::invalid_argument("topology is not connected");

  neighborhoods_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (adjacency_[k][l]) neighborhoods_[k].push_back(l);
    }
  }
}

Topology Topology::from_edges(std::size_t n_nodes,
                              const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<bool>> adj(n_nodes, std::vector<bool>(n_nodes, false));
  for (std::size_t k = 0; k < n_nodes; ++k) adj[k][k] = true;
  for (auto [k, l] : edges) {
    if (k >= n_nodes || l >= n_nodes) throw std::invalid_argument("edge endpoint out of range");
    adj[k][l] = adj[l][k] = true;
  }
  return Topology(std::move(adj));
}

std::vector<std::pair<std::size_t, std::size_t>> Topology::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t k = 0; k < size(); ++k) {
    for (std::size_t l = k + 1; l < size(); ++l) {
      if (adjacency_[k][l]) out.emplace_back(k, l);
    }
  }
  return out;
}

CombinationMatrix::CombinationMatrix(RMatrix weights) : weights_(std::move(weights)) {
  if (weights_.rows() != weights_.cols()) throw std::invalid_argument("combination matrix must be square");
  for (Eigen::Index k = 0; k < weights_.rows(); ++k) {
    if ((weights_.row(k).array() < 0.0).any()) throw std::invalid_argument("negative combination weight");
    if (std::abs(weights_.row(k).sum() - 1.0) > 1e-12) {
      throw std::invalid_argument("combination row " + std::to_string(k + 1) + " does not sum to one");
    }
  }
}

std::vector<double> CombinationMatrix::row(std::size_t k, const std::vector<std::size_t>& neighbors) const {
  std::vector<double> out;
  out.reserve(neighbors.size());
  for (std::size_t l : neighbors) out.push_back((*this)(k, l));
  return out;
}

CombinationMatrix metropolis_weights(const Topology& topology) {
  const std::size_t n = topology.size();
  RMatrix c = RMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) {
    double off = 0.0;
    for (std::size_t l : topology.neighbors(k)) {
      if (l == k) continue;
      const double w = 1.0 / static_cast<double>(std::max(topology.degree(k), topology.degree(l)));
      c(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) = w;
      off += w;
    }
    c(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = 1.0 - off;
  }
  return CombinationMatrix(std::move(c));
}

Topology random_connected_topology(std::size_t n_nodes, double target_degree, std::uint64_t seed) {
  if (n_nodes == 0) throw std::invalid_argument("n_nodes must be at least 1");
  if (n_nodes == 1) return Topology::single_node();
  if (!(target_degree > 0.0) || !(target_degree < static_cast<double>(n_nodes))) {
    throw std::invalid_argument("target_degree must lie in (0, n_nodes)");
  }
  Engine engine = make_engine({seed, static_cast<std::uint64_t>(StreamRole::kTopology)});
  const double p = std::min(1.0, target_degree / static_cast<double>(n_nodes - 1));
  std::bernoulli_distribution coin(p);

  std::vector<std::vector<bool>> adj(n_nodes, std::vector<bool>(n_nodes, false));
  for (std::size_t k = 0; k < n_nodes; ++k) {
    adj[k][k] = true;
    for (std::size_t l = k + 1; l < n_nodes; ++l) {
      if (coin(engine)) adj[k][l] = adj[l][k] = true;
    }
  }

  // Random spanning tree: attach each node of a shuffled order to an earlier one.
  std::vector<std::size_t> order(n_nodes);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), engine);
  for (std::size_t i = 1; i < n_nodes; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    const std::size_t a = order[i];
    const std::size_t b = order[pick(engine)];
    adj[a][b] = adj[b][a] = true;
  }
  return Topology(std::move(adj));
}

Topology read_edge_list(std::istream& in) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t n = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long k = 0;
    long long l = 0;
    if (!(fields >> k)) continue;
    if (!(fields >> l) || k < 1 || l < 1) {
      throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": expected two 1-indexed node ids");
    }
    std::string extra;
    if (fields >> extra) {
      throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": trailing content");
    }
    n = std::max({n, static_cast<std::size_t>(k), static_cast<std::size_t>(l)});
    edges.emplace_back(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(l - 1));
  }
  if (n == 0) throw std::invalid_argument("edge list is empty");
  return Topology::from_edges(n, edges);
}

Topology load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open edge list: " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Topology& topology) {
  const auto edges = topology.edges();
  std::vector<bool> covered(topology.size(), false);
  for (auto [k, l] : edges) {
    out << (k + 1) << ' ' << (l + 1) << '\n';
    covered[k] = covered[l] = true;
  }
  // Isolated nodes only occur for N = 1 in a connected graph.
  for (std::size_t k = 0; k < topology.size(); ++k) {
    if (!covered[k]) out << (k + 1) << ' ' << (k + 1) << '\n';
  }
}

Topology ieee14_topology() {
  static constexpr std::pair<int, int> kBranches[] = {
      {1, 2}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {4, 5}, {4, 7}, {4, 9}, {5, 6},
      {6, 11}, {6, 12}, {6, 13}, {7, 8}, {7, 9}, {9, 10}, {9, 14}, {10, 11}, {12, 13}, {13, 14},
  };
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto [a, b] : kBranches) {
    edges.emplace_back(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
  }
  return Topology::from_edges(14, edges);
}

}  // namespace drjio
