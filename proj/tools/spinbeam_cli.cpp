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

// spinbeam command-line front end. Talks to the library only through the
// C interface in spinbeam/spinbeam.h.

#include <CLI11.hpp>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "spinbeam/spinbeam.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;
constexpr int kExitInternal = 1;

int exit_code(sb_status status) {
  switch (status) {
    case SB_OK: return kExitOk;
    case SB_ERR_CONFIG:
    case SB_ERR_INVALID_ARGUMENT:
    case SB_ERR_OUT_OF_RANGE: return kExitConfig;
    case SB_ERR_NUMERICAL: return kExitNumerical;
    case SB_ERR_IO: return kExitIo;
    case SB_ERR_INTERNAL: return kExitInternal;
  }
  return kExitInternal;
}

int report(sb_status status) {
  std::cerr << "spinbeam: " << sb_status_name(status) << ": " << sb_last_error() << "\n";
  return exit_code(status);
}

struct Options {
  std::string config_path;
  std::string out_path;
  std::string format;
  int threads = 1;
  std::string hamiltonian_path;
};

int dump_hamiltonian(const std::string& config, const std::string& path) {
  sb_network* network = nullptr;
  if (sb_status s = sb_experiment_network(config.c_str(), &network); s != SB_OK) {
    return report(s);
  }
  sb_hamiltonian* hamiltonian = nullptr;
  sb_status s = sb_hamiltonian_create(network, &hamiltonian);
  if (s == SB_OK) s = sb_hamiltonian_write_csv(hamiltonian, path.c_str());
  sb_hamiltonian_free(hamiltonian);
  sb_network_free(network);
  return s == SB_OK ? kExitOk : report(s);
}

int run(const char* command, const Options& options) {
  std::ifstream in(options.config_path, std::ios::binary);
  if (!in) {
    std::cerr << "spinbeam: i/o error: cannot read config '" << options.config_path << "'\n";
    return kExitIo;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string config = buffer.str();

  if (!options.hamiltonian_path.empty()) {
    if (int code = dump_hamiltonian(config, options.hamiltonian_path); code != kExitOk) {
      return code;
    }
  }

  char* output = nullptr;
  const sb_status status = sb_experiment_run(
      command, config.c_str(), options.out_path.empty() ? nullptr : options.out_path.c_str(),
      options.format.empty() ? nullptr : options.format.c_str(), options.threads, &output);
  if (status != SB_OK) return report(status);
  if (output != nullptr) {
    std::fwrite(output, 1, std::strlen(output), stdout);
    sb_string_free(output);
    if (std::fflush(stdout) != 0) {
      std::cerr << "spinbeam: i/o error: failed writing to stdout\n";
      return kExitIo;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-excitation spin network experiments"};
  app.set_version_flag("--version", std::string(sb_version()));
  app.require_subcommand(1);

  Options options;
  struct Command {
    const char* name;
    const char* help;
    const char* kind;  // nullptr: taken from observable.kind
  };
  const std::vector<Command> commands{
      {"reflect-sweep", "Reflection factor over a (J_nB, J_nC) grid", "reflect-sweep"},
      {"concurrence-sweep", "Maximal output concurrence over a (J_nB, J_nC) grid",
       "concurrence-sweep"},
      {"interfere", "Interferometer intensity over a path-difference range", "interfere"},
      {"transform-check", "Collective-basis decoupling report", "transform-check"},
      {"evolve-dump", "Per-site occupation trajectories", "evolve-dump"},
      {"run", "Run the experiment named by observable.kind", nullptr},
  };

  const char* selected = nullptr;
  for (const auto& command : commands) {
    CLI::App* sub = app.add_subcommand(command.name, command.help);
    sub->add_option("--config", options.config_path, "Experiment config (JSON)")->required();
    sub->add_option("--out", options.out_path, "Output path (default: config, else stdout)");
    sub->add_option("--format", options.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--threads", options.threads, "Worker threads for grid sweeps")
        ->check(CLI::PositiveNumber);
    sub->add_option("--dump-hamiltonian", options.hamiltonian_path,
                    "Also write the Hamiltonian as row,col,value CSV");
    sub->callback([&selected, &command] { selected = command.kind ? command.kind : ""; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }
  if (selected == nullptr) return kExitConfig;
  return run(*selected ? selected : nullptr, options);
}
