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

#ifndef SPINBEAM_EXPERIMENT_HPP
#define SPINBEAM_EXPERIMENT_HPP

// Declarative experiment runs: a JSON config selects a topology, an input
// packet and an observable grid; the runner evaluates every grid point and
// serializes a self-describing CSV or JSON artifact. Nothing in the pipeline
// is stochastic, so identical configs give byte-identical artifacts
// regardless of thread count.
//
// Config layout:
//
//   {
//     "network":    {"topology": "ybeam", "M": 50, "N_B": 50, ...},
//     "packet":     {"leg": "A", "n0": 25, "alpha": 0.3, "momentum": 1.5708},
//     "observable": {"kind": "reflection",
//                    "j_nb": {"start": 0, "stop": 1.5, "step": 0.0375},
//                    "j_nc": 0.7071, "t0": 25},
//     "output":     {"path": "fig2.csv", "format": "csv"}
//   }

#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spinbeam/collective.hpp"
#include "spinbeam/network.hpp"
#include "spinbeam/wavepacket.hpp"

namespace spinbeam {

using Json = nlohmann::ordered_json;

enum class ExperimentKind { reflection, concurrence, interference, transform_check, evolve };
enum class OutputFormat { csv, json };

std::string_view kind_name(ExperimentKind kind);
std::string_view subcommand_name(ExperimentKind kind);
// Accepts either a subcommand ("reflect-sweep") or a kind ("reflection").
std::optional<ExperimentKind> parse_kind(std::string_view name);
std::optional<OutputFormat> parse_format(std::string_view name);

// Inclusive arithmetic grid start, start + step, ..., stop.
struct Range {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  std::vector<double> values() const;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::reflection;
  Json network;  // resolved builder parameters, including "topology"
  GaussianPacketSpec packet;
  std::optional<Range> j_nb;
  std::optional<Range> j_nc;
  std::optional<Range> delta;
  std::optional<Range> times;
  std::optional<double> t0;
  std::optional<int> r0;
  int time_points = 400;
  std::string output_path;  // empty: caller decides (stdout for the CLI)
  OutputFormat format = OutputFormat::csv;
};

// Validates every block and fills defaults. `kind` (from a subcommand)
// takes precedence over observable.kind; a disagreement is an error.
// Throws ConfigError naming the offending key.
ExperimentConfig parse_config(const Json& document,
                              std::optional<ExperimentKind> kind = std::nullopt);
ExperimentConfig parse_config_text(std::string_view text,
                                   std::optional<ExperimentKind> kind = std::nullopt);

// Builds the network described by a resolved or raw "network" block.
SpinNetwork build_network(const Json& block);

struct SweepGrid {
  std::vector<std::pair<std::string, std::vector<double>>> axes;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;  // row-major over axes
  Json metadata;                          // resolved config echo
  std::optional<Json> report;             // transform-check only
};

SweepGrid run_experiment(const ExperimentConfig& config, int threads = 1);

// CSV: a "# <metadata json>" line, a header line, then one line per row.
std::string serialize(const SweepGrid& grid, OutputFormat format);

std::string run_config(const ExperimentConfig& config, int threads = 1);

Json to_json(const DecouplingReport& report);

// Throws IoError on failure.
void write_artifact(const std::string& path, std::string_view text);

}  // namespace spinbeam

#endif  // SPINBEAM_EXPERIMENT_HPP
