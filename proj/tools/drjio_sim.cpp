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

// drjio_sim: runs the diffusion estimation scenarios and writes CSV results.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "drjio/complexity.hpp"
#include "drjio/harness.hpp"
#include "drjio/scenario.hpp"

namespace {

struct Options {
  std::string scenario;
  std::string config_path;
  std::optional<std::size_t> runs;
  std::optional<std::size_t> iters;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> threads;
  std::string algorithms;
  std::string sweep_rank;
  std::string complexity_sweep;
  std::int64_t nk = 5;
  std::string out_dir = "results";
  bool list_scenarios = false;
};

std::pair<long long, long long> parse_range(const std::string& flag, const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument(flag + " expects lo:hi, got '" + text + "'");
  try {
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    const std::string lo_text = text.substr(0, colon);
    const std::string hi_text = text.substr(colon + 1);
    const long long lo = std::stoll(lo_text, &used_lo);
    const long long hi = std::stoll(hi_text, &used_hi);
    if (used_lo != lo_text.size() || used_hi != hi_text.size()) throw std::invalid_argument("trailing text");
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument(flag + " expects integer bounds lo:hi, got '" + text + "'");
  }
}

drjio::ScenarioConfig resolve_config(const Options& opt) {
  std::vector<std::pair<std::string, std::string>> file_settings;
  if (!opt.config_path.empty()) {
    std::ifstream in(opt.config_path);
    if (!in) throw std::invalid_argument("cannot open config file '" + opt.config_path + "'");
    file_settings = drjio::parse_config_text(in);
  }

  std::string name = "custom";
  for (const auto& [key, value] : file_settings) {
    if (key == "scenario") name = value;
  }
  if (!opt.scenario.empty()) name = opt.scenario;

  drjio::ScenarioConfig config = drjio::scenario_preset(name);
  for (const auto& [key, value] : file_settings) {
    if (key != "scenario") drjio::apply_setting(config, key, value);
  }
  if (opt.runs) config.runs = *opt.runs;
  if (opt.iters) config.iterations = *opt.iters;
  if (opt.seed) config.seed = *opt.seed;
  if (opt.threads) config.threads = *opt.threads;
  if (!opt.algorithms.empty()) drjio::apply_setting(config, "algorithms", opt.algorithms);
  config.validate();
  return config;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
}

int run(const Options& opt) {
  if (opt.list_scenarios) {
    for (const auto& name : drjio::builtin_scenario_names()) std::cout << name << '\n';
    return 0;
  }

  const drjio::ScenarioConfig config = resolve_config(opt);
  const std::filesystem::path out_dir(opt.out_dir);
  std::filesystem::create_directories(out_dir);

  if (!opt.complexity_sweep.empty()) {
    const auto [lo, hi] = parse_range("--complexity-sweep", opt.complexity_sweep);
    std::ostringstream csv;
    drjio::write_complexity_csv(csv, drjio::complexity_sweep(lo, hi, config.d, opt.nk));
    write_file(out_dir / "complexity.csv", csv.str());
    std::cout << "wrote " << (out_dir / "complexity.csv").string() << '\n';
    return 0;
  }

  if (!opt.sweep_rank.empty()) {
    const auto [lo, hi] = parse_range("--sweep-rank", opt.sweep_rank);
    const auto rows = drjio::rank_sweep(config, lo, hi);
    std::ostringstream csv;
    drjio::write_rank_sweep_csv(csv, config.scenario, rows);
    write_file(out_dir / "rank_sweep.csv", csv.str());
    std::ostringstream manifest;
    manifest << "# resolved configuration\n";
    drjio::write_config(manifest, config);
    manifest << "sweep_rank=" << lo << ':' << hi << '\n';
    write_file(out_dir / "manifest.txt", manifest.str());
    std::cout << "wrote " << (out_dir / "rank_sweep.csv").string() << " and manifest.txt\n";
    return 0;
  }

  const drjio::ScenarioResult result = drjio::run_scenario(config);
  std::ostringstream csv;
  drjio::write_mse_csv(csv, result);
  write_file(out_dir / "mse.csv", csv.str());
  std::ostringstream manifest;
  drjio::write_manifest(manifest, result);
  write_file(out_dir / "manifest.txt", manifest.str());

  for (const auto& ar : result.algorithms) {
    std::cout << drjio::to_string(ar.algorithm) << ": final MSE "
              << drjio::to_db(ar.mse.per_iteration.back()) << " dB over " << ar.mse.runs << " runs";
    if (ar.diverged_runs > 0) std::cout << " (" << ar.diverged_runs << " diverged runs excluded)";
    std::cout << '\n';
  }
  if (!result.paired_data_verified) {
    std::cerr << "error: algorithms did not consume identical data streams\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed reduced-rank diffusion estimation simulator"};
  Options opt;
  app.add_option("--scenario", opt.scenario, "Built-in scenario name or 'custom'");
  app.add_option("--config", opt.config_path, "Flat key=value config file; flags override its values")
      ->check(CLI::ExistingFile);
  app.add_option("--runs", opt.runs, "Monte Carlo runs")->check(CLI::PositiveNumber);
  app.add_option("--iters", opt.iters, "Iterations per run")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "Root seed");
  app.add_option("--threads", opt.threads, "Worker threads for runs (0 = all cores)");
  app.add_option("--out", opt.out_dir, "Output directory")->capture_default_str();
  app.add_option("--algorithms", opt.algorithms, "Comma list of drjio-nlms,drjio-rls,dnlms,drls");
  app.add_option("--sweep-rank", opt.sweep_rank, "Rank sweep lo:hi; writes rank_sweep.csv");
  app.add_option("--complexity-sweep", opt.complexity_sweep, "Operation counts for M in lo:hi; writes complexity.csv");
  app.add_option("--nk", opt.nk, "Neighborhood size |N_k| for --complexity-sweep")->capture_default_str();
  app.add_flag("--list-scenarios", opt.list_scenarios, "Print the built-in scenario names");
  CLI11_PARSE(app, argc, argv);

  try {
    return run(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
