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

#include "drjio/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <iomanip>
#include <limits>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "drjio/oracle.hpp"
#include "drjio/rng.hpp"

namespace drjio {
namespace {

struct RunRecord {
  std::vector<double> mse;
  std::vector<double> msd;
  bool diverged = false;
  std::size_t divergence_iteration = 0;
  std::vector<CVector> finals;
  std::uint64_t checksum = 0;
  std::uint64_t values_exchanged = 0;
  std::size_t publications = 0;
  Eigen::Index payload_size = 0;
};

struct RunOutput {
  std::vector<RunRecord> per_algorithm;
  std::uint64_t stream_checksum = 0;
};

Topology make_topology(const ScenarioConfig& config) {
  switch (config.topology) {
    case TopologyKind::kRandom:
      return random_connected_topology(config.n_nodes, config.target_degree, config.seed);
    case TopologyKind::kIeee14:
      return ieee14_topology();
    case TopologyKind::kFile: {
      Topology t = load_edge_list(config.topology_file);
      if (t.size() != config.n_nodes) {
        throw std::invalid_argument("topology file has " + std::to_string(t.size()) + " nodes but n_nodes is " +
                                    std::to_string(config.n_nodes));
      }
      return t;
    }
  }
  throw std::invalid_argument("unknown topology kind");
}

RunOutput simulate_run(const ScenarioConfig& config, const ScenarioInstance& instance, std::size_t run) {
  const std::size_t n = instance.topology.size();
  const AgentSettings settings = agent_settings(config);
  const CVector& omega0 = instance.omega0.omega0;

  std::vector<NodeStream> streams;
  streams.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    streams.emplace_back(instance.nodes[k], omega0,
                         make_engine({config.seed, run, k, static_cast<std::uint64_t>(StreamRole::kRegressor)}),
                         make_engine({config.seed, run, k, static_cast<std::uint64_t>(StreamRole::kNoise)}));
  }

  std::vector<DiffusionNetwork> networks;
  networks.reserve(config.algorithms.size());
  for (SimAlgorithm a : config.algorithms) networks.emplace_back(a, settings, instance.topology, instance.weights);

  RunOutput out;
  out.per_algorithm.resize(networks.size());
  for (auto& rec : out.per_algorithm) {
    rec.mse.reserve(config.iterations);
    rec.msd.reserve(config.iterations);
  }

  SampleChecksum generated;
  std::vector<Sample> samples(n);
  for (std::size_t i = 0; i < config.iterations; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      samples[k] = streams[k].next();
      generated.add(samples[k]);
    }
    for (std::size_t a = 0; a < networks.size(); ++a) {
      RunRecord& rec = out.per_algorithm[a];
      if (rec.diverged) continue;
      try {
        const StepErrors e = networks[a].step(samples, omega0, i + 1);
        if (!std::isfinite(e.mse)) throw DivergenceError("network error became non-finite", i + 1);
        rec.mse.push_back(e.mse);
        rec.msd.push_back(e.msd);
      } catch (const DivergenceError& err) {
        rec.diverged = true;
        rec.divergence_iteration = err.iteration();
      }
    }
  }

  out.stream_checksum = generated.value();
  for (std::size_t a = 0; a < networks.size(); ++a) {
    RunRecord& rec = out.per_algorithm[a];
    rec.checksum = networks[a].consumed_checksum();
    rec.values_exchanged = networks[a].values_exchanged();
    rec.publications = networks[a].publications();
    rec.payload_size = networks[a].size() > 0 ? networks[a].agent(0).payload_size() : 0;
    if (!rec.diverged) rec.finals = networks[a].estimates();
  }
  return out;
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  std::ostringstream s;
  s << std::setprecision(10) << v;
  return s.str();
}

}  // namespace

AgentSettings agent_settings(const ScenarioConfig& config) {
  AgentSettings s = config.agent;
  s.m = config.m;
  s.d = config.d;
  return s;
}

ScenarioInstance build_instance(const ScenarioConfig& config) {
  config.validate();
  Topology topology = make_topology(config);
  CombinationMatrix weights = metropolis_weights(topology);

  Engine alpha_engine = make_engine({config.seed, static_cast<std::uint64_t>(StreamRole::kAlpha)});
  std::vector<NodeSignalModel> nodes(topology.size());
  for (auto& node : nodes) {
    double alpha = config.alpha_min;
    if (config.alpha_max > config.alpha_min) {
      alpha = std::uniform_real_distribution<double>(config.alpha_min, config.alpha_max)(alpha_engine);
    }
    node.alpha = alpha;
    node.noise_var = config.noise_var;
    node.regressor_len = config.m;
    node.validate();
  }

  const Eigen::Index support = config.parameter == ParameterKind::kSparse ? config.nonzeros : config.m;
  ParameterVector omega0 = make_parameter(config.parameter, config.m, support, config.seed);
  return ScenarioInstance{std::move(topology), std::move(weights), std::move(nodes), std::move(omega0)};
}

ScenarioResult run_scenario(const ScenarioConfig& config) {
  ScenarioResult result{config, build_instance(config), {}, {}, false};
  const std::size_t runs = config.runs;
  std::vector<RunOutput> outputs(runs);

  std::size_t workers = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, runs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t r = next++; r < runs; r = next++) {
      try {
        outputs[r] = simulate_run(config, result.instance, r);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = runs;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  result.paired_data_verified = true;
  for (const auto& out : outputs) result.stream_checksums.push_back(out.stream_checksum);

  for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
    AlgorithmResult ar;
    ar.algorithm = config.algorithms[a];
    const std::string label = to_string(ar.algorithm);
    std::vector<MseTrace> kept_mse;
    std::vector<MseTrace> kept_msd;
    for (std::size_t r = 0; r < runs; ++r) {
      RunRecord& rec = outputs[r].per_algorithm[a];
      ar.run_mse.push_back(MseTrace{rec.mse, 1, label, config.scenario});
      ar.diverged.push_back(rec.diverged);
      ar.divergence_iteration.push_back(rec.divergence_iteration);
      ar.consumed_checksums.push_back(rec.checksum);
      ar.values_exchanged += rec.values_exchanged;
      ar.publications += rec.publications;
      ar.payload_size = rec.payload_size;
      ar.final_estimates.push_back(std::move(rec.finals));
      if (rec.diverged) {
        ++ar.diverged_runs;
      } else {
        if (rec.checksum != outputs[r].stream_checksum) result.paired_data_verified = false;
        kept_mse.push_back(MseTrace{std::move(rec.mse), 1, label, config.scenario});
        kept_msd.push_back(MseTrace{std::move(rec.msd), 1, label, config.scenario});
      }
    }
    if (kept_mse.empty()) {
      const std::vector<double> nan(config.iterations, std::numeric_limits<double>::quiet_NaN());
      ar.mse = MseTrace{nan, 0, label, config.scenario};
      ar.msd = ar.mse;
    } else {
      ar.mse = average_traces(kept_mse);
      ar.msd = average_traces(kept_msd);
    }
    result.algorithms.push_back(std::move(ar));
  }
  return result;
}

void write_mse_csv(std::ostream& out, const ScenarioResult& result) {
  out << "iteration,algorithm,scenario,mse,mse_db,msd\n";
  for (const auto& ar : result.algorithms) {
    const std::string label = to_string(ar.algorithm);
    for (std::size_t i = 0; i < ar.mse.per_iteration.size(); ++i) {
      const double mse = ar.mse.per_iteration[i];
      const double db = std::isnan(mse) ? mse : to_db(mse);
      out << (i + 1) << ',' << label << ',' << result.config.scenario << ',' << format_real(mse) << ','
          << format_real(db) << ',' << format_real(ar.msd.per_iteration[i]) << '\n';
    }
  }
}

void write_manifest(std::ostream& out, const ScenarioResult& result) {
  out << "# resolved configuration\n";
  write_config(out, result.config);
  const auto& inst = result.instance;
  out << "# instance\n";
  out << "resolved_nodes=" << inst.topology.size() << '\n';
  out << "edges=";
  bool first = true;
  for (auto [k, l] : inst.topology.edges()) {
    out << (first ? "" : " ") << (k + 1) << '-' << (l + 1);
    first = false;
  }
  out << '\n';
  for (std::size_t k = 0; k < inst.nodes.size(); ++k) {
    out << "alpha." << (k + 1) << '=' << format_real(inst.nodes[k].alpha.real()) << '\n';
  }
  out << "omega0_norm=" << format_real(inst.omega0.omega0.norm()) << '\n';
  out << "omega0_nonzeros=" << (inst.omega0.omega0.array() != Complex{0.0, 0.0}).count() << '\n';
  out << "# outcome\n";
  out << "paired_data=" << (result.paired_data_verified ? "verified" : "mismatch") << '\n';
  for (const auto& ar : result.algorithms) {
    const std::string key = "result." + to_string(ar.algorithm);
    out << key << ".runs_averaged=" << ar.mse.runs << '\n';
    out << key << ".diverged_runs=" << ar.diverged_runs << '\n';
    out << key << ".values_per_publication=" << ar.payload_size << '\n';
    out << key << ".values_exchanged=" << ar.values_exchanged << '\n';
    if (!ar.mse.per_iteration.empty()) {
      const double last = ar.mse.per_iteration.back();
      out << key << ".final_mse_db=" << format_real(std::isnan(last) ? last : to_db(last)) << '\n';
    }
  }
}

std::vector<RankSweepRow> rank_sweep(const ScenarioConfig& config, Eigen::Index d_lo, Eigen::Index d_hi) {
  if (d_lo < 1 || d_lo > d_hi || d_hi > config.m) {
    throw std::invalid_argument("rank sweep range must satisfy 1 <= lo <= hi <= m");
  }
  std::vector<RankSweepRow> rows;
  for (Eigen::Index d = d_lo; d <= d_hi; ++d) {
    ScenarioConfig c = config;
    c.d = d;
    const ScenarioResult result = run_scenario(c);
    for (const auto& ar : result.algorithms) {
      rows.push_back({d, to_string(ar.algorithm), ar.mse.per_iteration.back()});
    }
    double oracle = 0.0;
    for (const auto& node : result.instance.nodes) {
      oracle += rank_d_wiener(exact_moments(node, result.instance.omega0.omega0), d).mse;
    }
    rows.push_back({d, "rank-d-wiener", oracle / static_cast<double>(result.instance.nodes.size())});
  }
  return rows;
}

void write_rank_sweep_csv(std::ostream& out, const std::string& scenario, const std::vector<RankSweepRow>& rows) {
  out << "D,algorithm,scenario,mse,mse_db\n";
  for (const auto& row : rows) {
    const double db = std::isnan(row.mse) ? row.mse : to_db(row.mse);
    out << row.d << ',' << row.algorithm << ',' << scenario << ',' << format_real(row.mse) << ','
        << format_real(db) << '\n';
  }
}

}  // namespace drjio
