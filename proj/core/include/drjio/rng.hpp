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

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "drjio/types.hpp"

namespace drjio {

using Engine = std::mt19937_64;

// Hierarchical seed splitting: the engine for (root, run, node, role) is
// independent of every other path and of the order engines are created in.
inline Engine make_engine(std::initializer_list<std::uint64_t> path) {
  std::vector<std::uint32_t> words;
  words.reserve(2 * path.size() + 1);
  words.push_back(static_cast<std::uint32_t>(path.size()));
  for (std::uint64_t v : path) {
    words.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
    words.push_back(static_cast<std::uint32_t>(v >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  return Engine(seq);
}

// Stream roles used as the last element of a seed path.
enum class StreamRole : std::uint64_t {
  kRegressor = 1,
  kNoise = 2,
  kParameter = 3,
  kTopology = 4,
  kAlpha = 5,
};

// Circular complex Gaussian with E|z|^2 = variance.
class ComplexGaussian {
 public:
  explicit ComplexGaussian(double variance = 1.0)
      : normal_(0.0, std::sqrt(variance / 2.0)) {}

  Complex operator()(Engine& engine) {
    const double re = normal_(engine);
    const double im = normal_(engine);
    return {re, im};
  }

 private:
  std::normal_distribution<double> normal_;
};

}  // namespace drjio
