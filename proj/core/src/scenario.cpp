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

#include "drjio/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace drjio {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_integer(const std::string& key, const std::string& value) {
  T out{};
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) throw std::invalid_argument("config key '" + key + "': bad integer '" + value + "'");
  return out;
}

double parse_real(const std::string& key, const std::string& value) {
  std::istringstream in(value);
  double out = 0.0;
  in >> out;
  if (!in || !(in >> std::ws).eof()) throw std::invalid_argument("config key '" + key + "': bad number '" + value + "'");
  return out;
}

std::vector<SimAlgorithm> parse_algorithms(const std::string& value) {
  std::vector<SimAlgorithm> out;
  std::istringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const SimAlgorithm a = parse_sim_algorithm(item);
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  }
  if (out.empty()) throw std::invalid_argument("config key 'algorithms': empty list");
  return out;
}

TopologyKind parse_topology_kind(const std::string& value) {
  if (value == "random") return TopologyKind::kRandom;
  if (value == "ieee14") return TopologyKind::kIeee14;
  if (value == "file") return TopologyKind::kFile;
  throw std::invalid_argument("config key 'topology': expected random, ieee14 or file, got '" + value + "'");
}

}  // namespace

std::string to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::kRandom:
      return "random";
    case TopologyKind::kIeee14:
      return "ieee14";
    case TopologyKind::kFile:
      return "file";
  }
  return "unknown";
}

void ScenarioConfig::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("invalid configuration: " + msg); };
  if (m < 1) fail("m must be at least 1");
  if (d < 1) fail("d must be at least 1");
  if (d > m) fail("d (" + std::to_string(d) + ") must not exceed m (" + std::to_string(m) + ")");
  if (n_nodes < 1) fail("n_nodes must be at least 1");
  if (iterations < 1) fail("iterations must be at least 1");
  if (runs < 1) fail("runs must be at least 1");
  if (!(noise_var >= 0.0)) fail("noise_var must be nonnegative");
  if (!(alpha_min >= 0.0 && alpha_min <= alpha_max && alpha_max < 1.0)) {
    fail("alpha range must satisfy 0 <= alpha_min <= alpha_max < 1");
  }
  if (parameter == ParameterKind::kSparse && (nonzeros < 1 || nonzeros > m)) {
    fail("nonzeros must lie in [1, m] for a sparse parameter");
  }
  if (topology == TopologyKind::kIeee14 && n_nodes != 14) fail("the ieee14 topology needs n_nodes = 14");
  if (topology == TopologyKind::kFile && topology_file.empty()) fail("topology = file needs topology_file");
  if (topology == TopologyKind::kRandom && n_nodes > 1 &&
      !(target_degree > 0.0 && target_degree < static_cast<double>(n_nodes))) {
    fail("target_degree must lie in (0, n_nodes)");
  }
  if (!(agent.lambda > 0.0 && agent.lambda <= 1.0)) fail("lambda must lie in (0, 1]");
  if (!(agent.delta_init > 0.0)) fail("delta_init must be positive");
  if (!(agent.baseline_eps >= 0.0)) fail("baseline_eps must be nonnegative");
  if (algorithms.empty()) fail("at least one algorithm must be selected");
  try {
    agent.nlms.validate();
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

const std::vector<std::string>& builtin_scenario_names() {
  static const std::vector<std::string> names = {"wsn-full-20", "wsn-full-60", "wsn-sparse-100", "wsn-sparse-20",
                                                 "smartgrid-14bus"};
  return names;
}

ScenarioConfig scenario_preset(const std::string& name) {
  ScenarioConfig c;
  c.scenario = name;
  if (name == "custom" || name == "wsn-full-20") return c;
  if (name == "wsn-full-60") {
    c.m = 60;
    return c;
  }
  if (name == "wsn-sparse-100") {
    c.m = 100;
    c.parameter = ParameterKind::kSparse;
    c.nonzeros = 5;
    return c;
  }
  if (name == "wsn-sparse-20") {
    c.d = 10;
    c.parameter = ParameterKind::kSparse;
    c.nonzeros = 3;
    c.agent.nlms.mu0 = 0.3;
    return c;
  }
  if (name == "smartgrid-14bus") {
    c.n_nodes = 14;
    c.m = 42;
    c.d = 10;
    c.iterations = 1000;
    c.alpha_min = c.alpha_max = 0.0;
    c.parameter = ParameterKind::kAllOnes;
    c.topology = TopologyKind::kIeee14;
    return c;
  }
  throw std::invalid_argument("unknown scenario '" + name + "'");
}

void apply_setting(ScenarioConfig& c, const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  if (key == "scenario") {
    c.scenario = value;
  } else if (key == "n_nodes") {
    c.n_nodes = parse_integer<std::size_t>(key, value);
  } else if (key == "m") {
    c.m = parse_integer<Eigen::Index>(key, value);
  } else if (key == "d") {
    c.d = parse_integer<Eigen::Index>(key, value);
  } else if (key == "iterations") {
    c.iterations = parse_integer<std::size_t>(key, value);
  } else if (key == "runs") {
    c.runs = parse_integer<std::size_t>(key, value);
  } else if (key == "seed") {
    c.seed = parse_integer<std::uint64_t>(key, value);
  } else if (key == "noise_var") {
    c.noise_var = parse_real(key, value);
  } else if (key == "alpha_min") {
    c.alpha_min = parse_real(key, value);
  } else if (key == "alpha_max") {
    c.alpha_max = parse_real(key, value);
  } else if (key == "parameter") {
    c.parameter = parse_parameter_kind(value);
  } else if (key == "nonzeros") {
    c.nonzeros = parse_integer<Eigen::Index>(key, value);
  } else if (key == "topology") {
    c.topology = parse_topology_kind(value);
  } else if (key == "topology_file") {
    c.topology_file = value;
  } else if (key == "target_degree") {
    c.target_degree = parse_real(key, value);
  } else if (key == "mu0") {
    c.agent.nlms.mu0 = parse_real(key, value);
  } else if (key == "eta0") {
    c.agent.nlms.eta0 = parse_real(key, value);
  } else if (key == "gamma") {
    c.agent.nlms.gamma = parse_real(key, value);
  } else if (key == "delta") {
    c.agent.nlms.delta = parse_real(key, value);
  } else if (key == "eps") {
    c.agent.nlms.eps = parse_real(key, value);
  } else if (key == "eta_eps") {
    c.agent.nlms.eta_eps = parse_real(key, value);
  } else if (key == "baseline_eps") {
    c.agent.baseline_eps = parse_real(key, value);
  } else if (key == "lambda") {
    c.agent.lambda = parse_real(key, value);
  } else if (key == "delta_init") {
    c.agent.delta_init = parse_real(key, value);
  } else if (key == "algorithms") {
    c.algorithms = parse_algorithms(value);
  } else if (key == "threads") {
    c.threads = parse_integer<std::size_t>(key, value);
  } else {
    throw std::invalid_argument("unknown config key '" + key + "'");
  }
}

std::vector<std::pair<std::string, std::string>> parse_config_text(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw std::invalid_argument("config line " + std::to_string(line_no) + ": empty key");
    out.emplace_back(std::move(key), trim(line.substr(eq + 1)));
  }
  return out;
}

void write_config(std::ostream& out, const ScenarioConfig& c) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(17);
  std::string algorithms;
  for (SimAlgorithm a : c.algorithms) algorithms += (algorithms.empty() ? "" : ",") + to_string(a);
  out << "scenario=" << c.scenario << '\n'
      << "n_nodes=" << c.n_nodes << '\n'
      << "m=" << c.m << '\n'
      << "d=" << c.d << '\n'
      << "iterations=" << c.iterations << '\n'
      << "runs=" << c.runs << '\n'
      << "seed=" << c.seed << '\n'
      << "noise_var=" << c.noise_var << '\n'
      << "alpha_min=" << c.alpha_min << '\n'
      << "alpha_max=" << c.alpha_max << '\n'
      << "parameter=" << to_string(c.parameter) << '\n'
      << "nonzeros=" << c.nonzeros << '\n'
      << "topology=" << to_string(c.topology) << '\n'
      << "topology_file=" << c.topology_file << '\n'
      << "target_degree=" << c.target_degree << '\n'
      << "mu0=" << c.agent.nlms.mu0 << '\n'
      << "eta0=" << c.agent.nlms.eta0 << '\n'
      << "gamma=" << c.agent.nlms.gamma << '\n'
      << "delta=" << c.agent.nlms.delta << '\n'
      << "eps=" << c.agent.nlms.eps << '\n'
      << "eta_eps=" << c.agent.nlms.eta_eps << '\n'
      << "baseline_eps=" << c.agent.baseline_eps << '\n'
      << "lambda=" << c.agent.lambda << '\n'
      << "delta_init=" << c.agent.delta_init << '\n'
      << "algorithms=" << algorithms << '\n';
  out.flags(flags);
  out.precision(precision);
}

}  // namespace drjio
