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
#include <iosfwd>
#include <string>
#include <vector>

#include "drjio/types.hpp"

namespace drjio {

// Undirected network graph. Every node belongs to its own neighborhood, so
// the adjacency diagonal is always true and degrees are self-inclusive.
class Topology {
 public:
  // Validates symmetry, a true diagonal and connectivity; throws
  // std::invalid_argument otherwise.
  explicit Topology(std::vector<std::vector<bool>> adjacency);

  static Topology single_node() { return Topology(std::vector<std::vector<bool>>{{true}}); }
  static Topology from_edges(std::size_t n_nodes,
                             const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t size() const noexcept { return adjacency_.size(); }
  bool linked(std::size_t k, std::size_t l) const { return adjacency_.at(k).at(l); }

  // |N_k|, counting k itself.
  std::size_t degree(std::size_t k) const { return neighborhoods_.at(k).size(); }

  // N_k in ascending order, including k.
  const std::vector<std::size_t>& neighbors(std::size_t k) const { return neighborhoods_.at(k); }

  // Undirected edges (k < l), zero-indexed.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  const std::vector<std::vector<bool>>& adjacency() const noexcept { return adjacency_; }

  bool operator==(const Topology& other) const { return adjacency_ == other.adjacency_; }

 private:
  std::vector<std::vector<bool>> adjacency_;
  std::vector<std::vector<std::size_t>> neighborhoods_;
};

// Row-stochastic diffusion weights c_kl, supported on the adjacency.
class CombinationMatrix {
 public:
  explicit CombinationMatrix(RMatrix weights);

  std::size_t size() const noexcept { return static_cast<std::size_t>(weights_.rows()); }
  double operator()(std::size_t k, std::size_t l) const {
    return weights_(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l));
  }
  const RMatrix& matrix() const noexcept { return weights_; }

  // Weights c_kl for l in `neighbors`, in the same order.
  std::vector<double> row(std::size_t k, const std::vector<std::size_t>& neighbors) const;

 private:
  RMatrix weights_;
};

// c_kl = 1/max(|N_k|,|N_l|) on links, c_kk = 1 - sum of the off-diagonal row.
CombinationMatrix metropolis_weights(const Topology& topology);

// Erdos-Renyi style sampling aimed at `target_degree` neighbors per node
// (self excluded), followed by the missing edges of a random spanning tree.
Topology random_connected_topology(std::size_t n_nodes, double target_degree, std::uint64_t seed);

// Edge-list text format: one "k l" pair per line, 1-indexed; '#' starts a
// comment. "k k" declares a node without adding an edge.
Topology read_edge_list(std::istream& in);
Topology load_edge_list(const std::string& path);
void write_edge_list(std::ostream& out, const Topology& topology);

// Standard IEEE 14-bus branch list.
Topology ieee14_topology();

}  // namespace drjio
