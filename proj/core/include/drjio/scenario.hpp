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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "drjio/network.hpp"
#include "drjio/signal.hpp"

namespace drjio {

enum class TopologyKind { kRandom, kIeee14, kFile };

// Resolved experiment configuration. Every field has a key of the same name
// in the flat key=value config format (see apply_setting).
struct ScenarioConfig {
  std::string scenario = "custom";
  std::size_t n_nodes = 20;
  Eigen::Index m = 20;
  Eigen::Index d = 5;
  std::size_t iterations = 500;
  std::size_t runs = 100;
  std::uint64_t seed = 1;
  double noise_var = 0.001;
  double alpha_min = 0.0;  // alpha_k ~ U[alpha_min, alpha_max], drawn once per scenario
  double alpha_max = 0.5;
  ParameterKind parameter = ParameterKind::kFullRank;
  Eigen::Index nonzeros = 0;  // support size of a sparse omega_0
  TopologyKind topology = TopologyKind::kRandom;
  std::string topology_file;
  double target_degree = 4.0;  // neighbors per node, self excluded
  AgentSettings agent;  // m and d here are overwritten from the fields above
  std::vector<SimAlgorithm> algorithms{std::begin(kAllSimAlgorithms), std::end(kAllSimAlgorithms)};
  std::size_t threads = 0;  // 0 picks the hardware concurrency

  // Throws std::invalid_argument naming the first violated constraint.
  void validate() const;
};

// The five built-in scenario names, in a fixed order.
const std::vector<std::string>& builtin_scenario_names();

// Preset for a built-in name or "custom". Throws std::invalid_argument.
ScenarioConfig scenario_preset(const std::string& name);

// Sets one field from its textual key and value. Throws std::invalid_argument
// for unknown keys and malformed values.
void apply_setting(ScenarioConfig& config, const std::string& key, const std::string& value);

// Parses "key = value" lines; '#' starts a comment and blank lines are skipped.
std::vector<std::pair<std::string, std::string>> parse_config_text(std::istream& in);

// Every field as key=value lines, in a fixed order, readable by parse_config_text.
void write_config(std::ostream& out, const ScenarioConfig& config);

std::string to_string(TopologyKind kind);

}  // namespace drjio
