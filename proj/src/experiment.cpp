// Copyright 2026 The spinbeam Authors
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

#include "spinbeam/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <numbers>
#include <set>
#include <thread>

#include "spinbeam/error.hpp"
#include "spinbeam/hamiltonian.hpp"
#include "spinbeam/observables.hpp"

namespace spinbeam {
namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

// Reads one config block, tracking which keys were consumed so leftovers
// can be reported as unknown.
class BlockReader {
 public:
  BlockReader(const Json& block, std::string prefix)
      : block_(block), prefix_(std::move(prefix)) {
    if (!block_.is_object()) throw ConfigError(prefix_, "must be a JSON object");
  }

  std::string key(std::string_view name) const { return prefix_ + "." + std::string(name); }

  bool has(const std::string& name) {
    if (!block_.contains(name)) return false;
    used_.insert(name);
    return true;
  }

  const Json& raw(const std::string& name) {
    used_.insert(name);
    return block_.at(name);
  }

  int integer(const std::string& name, int fallback) {
    if (!has(name)) return fallback;
    const Json& v = block_.at(name);
    if (!v.is_number_integer()) throw ConfigError(key(name), "must be an integer");
    return v.get<int>();
  }

  double number(const std::string& name, double fallback) {
    if (!has(name)) return fallback;
    return as_number(block_.at(name), key(name));
  }

  std::string text(const std::string& name, std::string fallback) {
    if (!has(name)) return fallback;
    const Json& v = block_.at(name);
    if (!v.is_string()) throw ConfigError(key(name), "must be a string");
    return v.get<std::string>();
  }

  void finish() const {
    for (auto it = block_.begin(); it != block_.end(); ++it) {
      if (!used_.count(it.key())) throw ConfigError(key(it.key()), "unknown key");
    }
  }

  static double as_number(const Json& v, const std::string& key) {
    if (!v.is_number()) throw ConfigError(key, "must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError(key, "must be finite");
    return x;
  }

 private:
  const Json& block_;
  std::string prefix_;
  std::set<std::string> used_;
};

Range parse_range(const Json& v, const std::string& key, bool integral) {
  Range r;
  if (v.is_number()) {
    r.start = r.stop = BlockReader::as_number(v, key);
    r.step = 1.0;
  } else {
    BlockReader reader(v, key);
    if (!reader.has("start")) throw ConfigError(key + ".start", "missing");
    r.start = reader.number("start", 0.0);
    r.stop = reader.number("stop", r.start);
    r.step = reader.number("step", 1.0);
    reader.finish();
  }
  if (!(r.step > 0.0)) throw ConfigError(key + ".step", "must be > 0");
  if (r.stop < r.start) throw ConfigError(key + ".stop", "must be >= start");
  if (integral) {
    for (double x : {r.start, r.stop, r.step}) {
      if (x != std::round(x)) throw ConfigError(key, "must hold integer values");
    }
  }
  return r;
}

Json range_json(const Range& r) {
  Json j;
  j["start"] = r.start;
  j["stop"] = r.stop;
  j["step"] = r.step;
  j["count"] = r.values().size();
  return j;
}

Json resolve_network(const Json& block) {
  BlockReader in(block, "network");
  if (!in.has("topology")) throw ConfigError("network.topology", "missing");
  const std::string topology = in.text("topology", "");
  Json out;
  out["topology"] = topology;
  if (topology == "star") {
    const int m = in.integer("m", 2);
    const double J = in.number("J", 1.0);
    out["m"] = m;
    out["M"] = in.integer("M", 50);
    out["N"] = in.integer("N", 50);
    out["J"] = J;
    out["J_n"] = in.number("J_n", m > 0 ? J / std::sqrt(m) : 0.0);
  } else if (topology == "ybeam") {
    out["M"] = in.integer("M", 50);
    out["N_B"] = in.integer("N_B", 50);
    out["N_C"] = in.integer("N_C", 50);
    out["J_A"] = in.number("J_A", 1.0);
    out["J_B"] = in.number("J_B", 1.0);
    out["J_C"] = in.number("J_C", 1.0);
    out["J_nB"] = in.number("J_nB", kInvSqrt2);
    out["J_nC"] = in.number("J_nC", kInvSqrt2);
  } else if (topology == "interferometer") {
    out["N_A"] = in.integer("N_A", 50);
    out["N_B"] = in.integer("N_B", 50);
    out["delta"] = in.integer("delta", 0);
    out["N_D"] = in.integer("N_D", 50);
    out["J"] = in.number("J", 1.0);
    out["J_node"] = in.number("J_node", kInvSqrt2);
  } else {
    throw ConfigError("network.topology",
                      "must be one of star, ybeam, interferometer (got '" + topology + "')");
  }
  in.finish();
  return out;
}

// The input coupling and lengths that set the ballistic time scale.
struct InputScale {
  int M = 0;
  int N = 0;
  double j_a = 1.0;
};

InputScale input_scale(const Json& net) {
  const std::string topology = net.at("topology").get<std::string>();
  if (topology == "star") {
    return {net.at("M").get<int>(), net.at("N").get<int>(), net.at("J").get<double>()};
  }
  if (topology == "ybeam") {
    return {net.at("M").get<int>(), net.at("N_B").get<int>(), net.at("J_A").get<double>()};
  }
  return {net.at("N_A").get<int>(), net.at("N_B").get<int>(), net.at("J").get<double>()};
}

std::string format_number(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void require_finite(const std::vector<double>& row) {
  for (double x : row) {
    if (!std::isfinite(x)) throw NumericalError("non-finite value in experiment output");
  }
}

// Runs task(i) for i in [0, count) on up to `threads` workers. Results are
// written by index, so completion order never affects output.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& task) {
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(threads, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

Json packet_json(const GaussianPacketSpec& p) {
  Json j;
  j["leg"] = p.leg;
  j["n0"] = p.n0;
  j["alpha"] = p.alpha;
  j["momentum"] = p.momentum;
  return j;
}

SpinNetwork network_with(const Json& net, const char* key, const Json& value) {
  Json copy = net;
  copy[key] = value;
  return build_network(copy);
}

SweepGrid run_coupling_sweep(const ExperimentConfig& config, Json& observable, int threads) {
  const auto scale = input_scale(config.network);
  const auto nb_values = config.j_nb->values();
  const auto nc_values = config.j_nc->values();
  const bool reflection = config.kind == ExperimentKind::reflection;

  SweepGrid grid;
  grid.axes = {{"j_nb", nb_values}, {"j_nc", nc_values}};
  grid.columns = reflection ? std::vector<std::string>{"j_nb", "j_nc", "R"}
                            : std::vector<std::string>{"j_nb", "j_nc", "c_max", "t_star"};

  double t0 = 0.0;
  std::vector<double> times;
  double window = 0.0;
  if (reflection) {
    t0 = config.t0.value_or(
        default_reflection_time(scale.M, scale.N, config.packet.n0, scale.j_a));
    if (t0 < 0.0) throw ConfigError("observable.t0", "must be >= 0");
    observable["t0"] = t0;
  } else {
    if (config.network.at("N_B") != config.network.at("N_C")) {
      throw ConfigError("network.N_C", "concurrence needs N_B == N_C");
    }
    window = packet_window(config.packet.alpha);
    if (config.times) {
      times = config.times->values();
      observable["times"] = range_json(*config.times);
    } else {
      times = default_concurrence_times(scale.M, scale.N, config.packet.n0, scale.j_a, window,
                                        config.time_points);
      Json t;
      t["start"] = times.front();
      t["stop"] = times.back();
      t["points"] = times.size();
      observable["times"] = t;
    }
    observable["window"] = window;
  }

  const std::size_t count = nb_values.size() * nc_values.size();
  grid.rows.resize(count);
  parallel_for(count, threads, [&](std::size_t index) {
    const double j_nb = nb_values[index / nc_values.size()];
    const double j_nc = nc_values[index % nc_values.size()];
    Json net = config.network;
    net["J_nB"] = j_nb;
    net["J_nC"] = j_nc;
    const SpinNetwork network = build_network(net);
    const Propagator propagator(single_excitation_hamiltonian(network));
    const StateVector psi0 = gaussian_packet(network, config.packet);
    std::vector<double> row{j_nb, j_nc};
    if (reflection) {
      row.push_back(reflection_factor(propagator, psi0, t0, scale.M).R);
    } else {
      const auto result = max_concurrence(propagator, network, psi0, times, window);
      row.push_back(result.c_max);
      row.push_back(result.t_star);
    }
    require_finite(row);
    grid.rows[index] = std::move(row);
  });
  return grid;
}

SweepGrid run_interference(const ExperimentConfig& config, Json& observable, int threads) {
  const auto deltas = config.delta->values();
  const double J = config.network.at("J").get<double>();
  const int n_d = config.network.at("N_D").get<int>();
  const int r0 = config.r0.value_or(n_d);
  if (r0 < 1 || r0 > n_d) throw ConfigError("observable.r0", "must be a site of leg D");
  const double t0 = config.t0.value_or(100.0 / J);
  if (t0 < 0.0) throw ConfigError("observable.t0", "must be >= 0");
  observable["r0"] = r0;
  observable["t0"] = t0;

  SweepGrid grid;
  grid.axes = {{"delta", deltas}};
  grid.columns = {"delta", "intensity"};
  grid.rows.resize(deltas.size());
  parallel_for(deltas.size(), threads, [&](std::size_t index) {
    const SpinNetwork network = network_with(config.network, "delta", static_cast<int>(std::lround(deltas[index])));
    const Propagator propagator(single_excitation_hamiltonian(network));
    const StateVector psi0 = gaussian_packet(network, config.packet);
    const auto result = interference_intensity(propagator, network, psi0,
                                               network.site_index("D", r0), t0);
    std::vector<double> row{deltas[index], result.intensity};
    require_finite(row);
    grid.rows[index] = std::move(row);
  });
  return grid;
}

SweepGrid run_evolve_dump(const ExperimentConfig& config, Json& observable) {
  const SpinNetwork network = build_network(config.network);
  const StateVector psi0 = gaussian_packet(network, config.packet);
  const auto times = config.times->values();
  observable["times"] = range_json(*config.times);

  SweepGrid grid;
  grid.axes = {{"t", times}};
  grid.columns.push_back("t");
  for (std::size_t i = 0; i < network.site_count(); ++i) {
    const auto site = network.locate(i);
    grid.columns.push_back(site.leg + std::to_string(site.position));
  }
  const Propagator propagator(single_excitation_hamiltonian(network));
  const auto states = propagator.evolve_series(psi0, times);
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (std::abs(states[k].norm() - 1.0) > 1e-8) {
      throw NumericalError("unitarity drift at t = " + format_number(times[k]));
    }
    std::vector<double> row{times[k]};
    const Eigen::VectorXd p = states[k].probabilities();
    row.insert(row.end(), p.data(), p.data() + p.size());
    require_finite(row);
    grid.rows.push_back(std::move(row));
  }
  return grid;
}

SweepGrid run_transform_check(const ExperimentConfig& config) {
  const auto report = decoupling_report(build_network(config.network));
  SweepGrid grid;
  grid.columns = {"outputs",       "theta",      "g",          "j_ab", "j_am", "h_vn_coeff",
                  "offblock_norm", "chain_a_node_bond", "chain_a_homogeneous"};
  std::vector<double> row{static_cast<double>(report.outputs),
                          report.theta.value_or(std::nan("")),
                          report.g,
                          report.j_ab,
                          report.j_am,
                          report.h_vn_coeff,
                          report.offblock_norm,
                          report.chain_a_node_bond,
                          report.chain_a_homogeneous ? 1.0 : 0.0};
  grid.rows.push_back(std::move(row));
  grid.report = to_json(report);
  return grid;
}

}  // namespace

std::string_view kind_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::reflection: return "reflection";
    case ExperimentKind::concurrence: return "concurrence";
    case ExperimentKind::interference: return "interference";
    case ExperimentKind::transform_check: return "transform-check";
    case ExperimentKind::evolve: return "evolve";
  }
  return "unknown";
}

std::string_view subcommand_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::reflection: return "reflect-sweep";
    case ExperimentKind::concurrence: return "concurrence-sweep";
    case ExperimentKind::interference: return "interfere";
    case ExperimentKind::transform_check: return "transform-check";
    case ExperimentKind::evolve: return "evolve-dump";
  }
  return "unknown";
}

std::optional<ExperimentKind> parse_kind(std::string_view name) {
  for (auto kind : {ExperimentKind::reflection, ExperimentKind::concurrence,
                    ExperimentKind::interference, ExperimentKind::transform_check,
                    ExperimentKind::evolve}) {
    if (name == kind_name(kind) || name == subcommand_name(kind)) return kind;
  }
  return std::nullopt;
}

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

std::vector<double> Range::values() const {
  // Tolerate rounding in (stop - start) / step so 0..1.5 by 0.0375 has 41 points.
  const double span = (stop - start) / step;
  const auto steps = static_cast<std::size_t>(std::floor(span + 1e-9));
  std::vector<double> out(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) out[i] = start + static_cast<double>(i) * step;
  if (std::abs(out.back() - stop) <= 1e-9 * step) out.back() = stop;
  return out;
}

SpinNetwork build_network(const Json& block) {
  const Json net = resolve_network(block);
  const std::string topology = net.at("topology").get<std::string>();
  try {
    if (topology == "star") {
      return build_star(net.at("m").get<int>(), net.at("M").get<int>(),
                        net.at("N").get<int>(), net.at("J").get<double>(),
                        net.at("J_n").get<double>());
    }
    if (topology == "ybeam") {
      return build_ybeam(net.at("M").get<int>(), net.at("N_B").get<int>(),
                         net.at("N_C").get<int>(), net.at("J_A").get<double>(),
                         net.at("J_B").get<double>(), net.at("J_C").get<double>(),
                         net.at("J_nB").get<double>(), net.at("J_nC").get<double>());
    }
    return build_interferometer(net.at("N_A").get<int>(), net.at("N_B").get<int>(),
                                net.at("delta").get<int>(), net.at("N_D").get<int>(),
                                net.at("J").get<double>(), net.at("J_node").get<double>());
  } catch (const ValidationError& e) {
    throw ConfigError("network", e.what());
  }
}

ExperimentConfig parse_config(const Json& document, std::optional<ExperimentKind> kind) {
  BlockReader root(document, "config");
  ExperimentConfig config;

  if (!root.has("network")) throw ConfigError("network", "missing");
  config.network = resolve_network(root.raw("network"));
  const SpinNetwork network = build_network(config.network);

  if (root.has("packet")) {
    BlockReader in(root.raw("packet"), "packet");
    config.packet.leg = in.text("leg", config.packet.leg);
    config.packet.n0 = in.number("n0", config.packet.n0);
    config.packet.alpha = in.number("alpha", config.packet.alpha);
    config.packet.momentum = in.number("momentum", config.packet.momentum);
    in.finish();
  }

  Json empty = Json::object();
  BlockReader obs(root.has("observable") ? root.raw("observable") : empty, "observable");
  if (obs.has("kind")) {
    const std::string name = obs.text("kind", "");
    const auto declared = parse_kind(name);
    if (!declared) throw ConfigError("observable.kind", "unknown kind '" + name + "'");
    if (kind && *kind != *declared) {
      throw ConfigError("observable.kind", "config declares '" + name + "' but command is '" +
                                               std::string(subcommand_name(*kind)) + "'");
    }
    kind = declared;
  }
  if (!kind) throw ConfigError("observable.kind", "missing (and no subcommand given)");
  config.kind = *kind;
  if (config.kind != ExperimentKind::transform_check) {
    try {
      (void)gaussian_packet(network, config.packet);
    } catch (const ValidationError& e) {
      throw ConfigError("packet", e.what());
    }
  }

  const std::string topology = config.network.at("topology").get<std::string>();
  auto require_topology = [&](std::initializer_list<const char*> allowed) {
    for (const char* t : allowed) {
      if (topology == t) return;
    }
    throw ConfigError("network.topology", "'" + topology + "' is not supported by " +
                                              std::string(subcommand_name(config.kind)));
  };

  switch (config.kind) {
    case ExperimentKind::reflection:
    case ExperimentKind::concurrence: {
      require_topology({"ybeam"});
      config.j_nb = obs.has("j_nb") ? parse_range(obs.raw("j_nb"), obs.key("j_nb"), false)
                                    : Range{config.network.at("J_nB").get<double>(),
                                            config.network.at("J_nB").get<double>(), 1.0};
      config.j_nc = obs.has("j_nc") ? parse_range(obs.raw("j_nc"), obs.key("j_nc"), false)
                                    : Range{config.network.at("J_nC").get<double>(),
                                            config.network.at("J_nC").get<double>(), 1.0};
      if (config.j_nb->start < 0.0) throw ConfigError("observable.j_nb", "must be >= 0");
      if (config.j_nc->start < 0.0) throw ConfigError("observable.j_nc", "must be >= 0");
      if (config.kind == ExperimentKind::reflection) {
        if (obs.has("t0")) config.t0 = obs.number("t0", 0.0);
      } else {
        if (obs.has("times")) config.times = parse_range(obs.raw("times"), obs.key("times"), false);
        config.time_points = obs.integer("time_points", config.time_points);
        if (config.time_points < 1) throw ConfigError("observable.time_points", "must be >= 1");
      }
      break;
    }
    case ExperimentKind::interference: {
      require_topology({"interferometer"});
      const double d = config.network.at("delta").get<int>();
      config.delta = obs.has("delta") ? parse_range(obs.raw("delta"), obs.key("delta"), true)
                                      : Range{d, d, 1.0};
      if (obs.has("r0")) config.r0 = obs.integer("r0", 0);
      if (obs.has("t0")) config.t0 = obs.number("t0", 0.0);
      break;
    }
    case ExperimentKind::transform_check:
      require_topology({"star", "ybeam"});
      break;
    case ExperimentKind::evolve:
      config.times = obs.has("times") ? parse_range(obs.raw("times"), obs.key("times"), false)
                                      : Range{0.0, 50.0, 1.0};
      if (config.times->start < 0.0) throw ConfigError("observable.times", "must be >= 0");
      break;
  }
  obs.finish();

  if (root.has("output")) {
    BlockReader out(root.raw("output"), "output");
    config.output_path = out.text("path", "");
    const std::string format = out.text("format", "csv");
    const auto parsed = parse_format(format);
    if (!parsed) throw ConfigError("output.format", "must be csv or json");
    config.format = *parsed;
    out.finish();
  }
  root.finish();
  return config;
}

ExperimentConfig parse_config_text(std::string_view text, std::optional<ExperimentKind> kind) {
  Json document;
  try {
    document = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError("config", std::string("malformed JSON: ") + e.what());
  }
  return parse_config(document, kind);
}

SweepGrid run_experiment(const ExperimentConfig& config, int threads) {
  Json observable;
  observable["kind"] = kind_name(config.kind);
  if (config.j_nb) observable["j_nb"] = range_json(*config.j_nb);
  if (config.j_nc) observable["j_nc"] = range_json(*config.j_nc);
  if (config.delta) observable["delta"] = range_json(*config.delta);

  SweepGrid grid;
  try {
    switch (config.kind) {
      case ExperimentKind::reflection:
      case ExperimentKind::concurrence:
        grid = run_coupling_sweep(config, observable, threads);
        break;
      case ExperimentKind::interference:
        grid = run_interference(config, observable, threads);
        break;
      case ExperimentKind::transform_check:
        grid = run_transform_check(config);
        break;
      case ExperimentKind::evolve:
        grid = run_evolve_dump(config, observable);
        break;
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const ValidationError& e) {
    // Grid points can produce inputs the builders reject (e.g. delta <= -N_B).
    throw ConfigError("observable", e.what());
  }

  grid.metadata["command"] = subcommand_name(config.kind);
  grid.metadata["network"] = config.network;
  grid.metadata["packet"] = packet_json(config.packet);
  grid.metadata["observable"] = observable;
  grid.metadata["format"] = config.format == OutputFormat::csv ? "csv" : "json";
  return grid;
}

std::string serialize(const SweepGrid& grid, OutputFormat format) {
  if (format == OutputFormat::json) {
    Json doc;
    doc["metadata"] = grid.metadata;
    doc["columns"] = grid.columns;
    Json rows = Json::array();
    for (const auto& row : grid.rows) {
      Json r = Json::array();
      for (double x : row) {
        if (std::isnan(x)) {
          r.push_back(nullptr);
        } else {
          r.push_back(x);
        }
      }
      rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    if (grid.report) doc["report"] = *grid.report;
    return doc.dump(2) + "\n";
  }

  std::string out = "# " + grid.metadata.dump() + "\n";
  for (std::size_t c = 0; c < grid.columns.size(); ++c) {
    if (c) out += ',';
    out += grid.columns[c];
  }
  out += '\n';
  for (const auto& row : grid.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_number(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string run_config(const ExperimentConfig& config, int threads) {
  return serialize(run_experiment(config, threads), config.format);
}

Json to_json(const DecouplingReport& report) {
  Json j;
  j["outputs"] = report.outputs;
  if (report.theta) {
    j["theta"] = *report.theta;
  } else {
    j["theta"] = nullptr;
  }
  j["g"] = report.g;
  j["J_AB"] = report.j_ab;
  j["J_aM"] = report.j_am;
  j["H_vn_coeff"] = report.h_vn_coeff;
  j["offblock_norm"] = report.offblock_norm;
  j["chain_a_node_bond"] = report.chain_a_node_bond;
  j["chain_a_homogeneous"] = report.chain_a_homogeneous;
  return j;
}

void write_artifact(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace spinbeam
