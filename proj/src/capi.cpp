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

#include "spinbeam/spinbeam.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <optional>
#include <span>
#include <string>

#include "spinbeam/collective.hpp"
#include "spinbeam/error.hpp"
#include "spinbeam/evolution.hpp"
#include "spinbeam/experiment.hpp"
#include "spinbeam/hamiltonian.hpp"
#include "spinbeam/network.hpp"
#include "spinbeam/observables.hpp"
#include "spinbeam/wavepacket.hpp"

struct sb_network {
  spinbeam::SpinNetwork value;
};

struct sb_hamiltonian {
  spinbeam::Hamiltonian matrix;
  spinbeam::Propagator propagator;
};

struct sb_state {
  spinbeam::StateVector value;
};

namespace {

thread_local std::string last_error;

sb_status fail(sb_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
sb_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return SB_OK;
  } catch (const spinbeam::ConfigError& e) {
    return fail(SB_ERR_CONFIG, e.what());
  } catch (const spinbeam::OutOfRangeError& e) {
    return fail(SB_ERR_OUT_OF_RANGE, e.what());
  } catch (const spinbeam::ValidationError& e) {
    return fail(SB_ERR_INVALID_ARGUMENT, e.what());
  } catch (const spinbeam::NumericalError& e) {
    return fail(SB_ERR_NUMERICAL, e.what());
  } catch (const spinbeam::IoError& e) {
    return fail(SB_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SB_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* pointer, const char* name) {
  if (pointer == nullptr) {
    throw spinbeam::ValidationError(std::string(name) + " must not be NULL");
  }
}

char* duplicate(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.data(), text.size() + 1);
  return out;
}

spinbeam::Json parse_json(const char* text, const char* what) {
  try {
    return spinbeam::Json::parse(text);
  } catch (const spinbeam::Json::parse_error& e) {
    throw spinbeam::ConfigError(what, std::string("malformed JSON: ") + e.what());
  }
}

sb_network* wrap(spinbeam::SpinNetwork network) {
  return new sb_network{std::move(network)};
}

}  // namespace

extern "C" {

const char* sb_version(void) { return "0.1.0"; }

const char* sb_last_error(void) { return last_error.c_str(); }

const char* sb_status_name(sb_status status) {
  switch (status) {
    case SB_OK: return "ok";
    case SB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SB_ERR_CONFIG: return "config error";
    case SB_ERR_NUMERICAL: return "numerical error";
    case SB_ERR_IO: return "i/o error";
    case SB_ERR_OUT_OF_RANGE: return "out of range";
    case SB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void sb_string_free(char* text) { std::free(text); }

sb_status sb_network_star(int m, int M, int N, double J, double j_node, sb_network** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(spinbeam::build_star(m, M, N, J, j_node));
  });
}

sb_status sb_network_ybeam(int M, int n_b, int n_c, double j_a, double j_b, double j_c,
                           double j_nb, double j_nc, sb_network** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(spinbeam::build_ybeam(M, n_b, n_c, j_a, j_b, j_c, j_nb, j_nc));
  });
}

sb_status sb_network_interferometer(int n_a, int n_b, int delta, int n_d, double J,
                                    double j_node, sb_network** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(spinbeam::build_interferometer(n_a, n_b, delta, n_d, J, j_node));
  });
}

sb_status sb_network_from_json(const char* network_json, sb_network** out) {
  return guarded([&] {
    require(network_json, "network_json");
    require(out, "out");
    *out = wrap(spinbeam::build_network(parse_json(network_json, "network")));
  });
}

void sb_network_free(sb_network* network) { delete network; }

sb_status sb_network_site_count(const sb_network* network, size_t* out) {
  return guarded([&] {
    require(network, "network");
    require(out, "out");
    *out = network->value.site_count();
  });
}

sb_status sb_network_site_index(const sb_network* network, const char* leg, int position,
                                size_t* out) {
  return guarded([&] {
    require(network, "network");
    require(leg, "leg");
    require(out, "out");
    *out = network->value.site_index(leg, position);
  });
}

sb_status sb_network_validate(const sb_network* network, int* ok, char** report) {
  return guarded([&] {
    require(network, "network");
    require(ok, "ok");
    const auto result = network->value.validate();
    *ok = result.ok() ? 1 : 0;
    if (report != nullptr) {
      std::string joined;
      for (const auto& v : result.violations) {
        if (!joined.empty()) joined += '\n';
        joined += v;
      }
      *report = duplicate(joined);
    }
  });
}

sb_status sb_hamiltonian_create(const sb_network* network, sb_hamiltonian** out) {
  return guarded([&] {
    require(network, "network");
    require(out, "out");
    auto h = spinbeam::single_excitation_hamiltonian(network->value);
    spinbeam::Propagator propagator(h);
    *out = new sb_hamiltonian{std::move(h), std::move(propagator)};
  });
}

void sb_hamiltonian_free(sb_hamiltonian* hamiltonian) { delete hamiltonian; }

sb_status sb_hamiltonian_dimension(const sb_hamiltonian* hamiltonian, size_t* out) {
  return guarded([&] {
    require(hamiltonian, "hamiltonian");
    require(out, "out");
    *out = hamiltonian->matrix.dimension();
  });
}

sb_status sb_hamiltonian_entry(const sb_hamiltonian* hamiltonian, size_t row, size_t col,
                               double* out) {
  return guarded([&] {
    require(hamiltonian, "hamiltonian");
    require(out, "out");
    const std::size_t n = hamiltonian->matrix.dimension();
    if (row >= n || col >= n) throw spinbeam::OutOfRangeError("matrix index out of range");
    *out = hamiltonian->matrix(row, col);
  });
}

sb_status sb_hamiltonian_eigenvalues(const sb_hamiltonian* hamiltonian, double* out,
                                     size_t capacity) {
  return guarded([&] {
    require(hamiltonian, "hamiltonian");
    require(out, "out");
    const auto& values = hamiltonian->propagator.eigensystem().eigenvalues;
    if (capacity < static_cast<std::size_t>(values.size())) {
      throw spinbeam::ValidationError("eigenvalue buffer too small");
    }
    for (Eigen::Index i = 0; i < values.size(); ++i) out[i] = values(i);
  });
}

sb_status sb_hamiltonian_write_csv(const sb_hamiltonian* hamiltonian, const char* path) {
  return guarded([&] {
    require(hamiltonian, "hamiltonian");
    require(path, "path");
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw spinbeam::IoError(std::string("cannot open '") + path + "' for writing");
    hamiltonian->matrix.write_triplets_csv(file);
    file.close();
    if (!file) throw spinbeam::IoError(std::string("failed writing '") + path + "'");
  });
}

sb_status sb_state_gaussian(const sb_network* network, const char* leg, double n0,
                            double alpha, double momentum, sb_state** out) {
  return guarded([&] {
    require(network, "network");
    require(leg, "leg");
    require(out, "out");
    spinbeam::GaussianPacketSpec spec{leg, n0, alpha, momentum};
    *out = new sb_state{spinbeam::gaussian_packet(network->value, spec)};
  });
}

sb_status sb_state_basis(size_t dimension, size_t site, sb_state** out) {
  return guarded([&] {
    require(out, "out");
    *out = new sb_state{spinbeam::StateVector::basis(dimension, site)};
  });
}

void sb_state_free(sb_state* state) { delete state; }

sb_status sb_state_size(const sb_state* state, size_t* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = state->value.size();
  });
}

sb_status sb_state_amplitude(const sb_state* state, size_t site, double* re, double* im) {
  return guarded([&] {
    require(state, "state");
    if (site >= state->value.size()) throw spinbeam::OutOfRangeError("site out of range");
    const auto a = state->value[site];
    if (re != nullptr) *re = a.real();
    if (im != nullptr) *im = a.imag();
  });
}

sb_status sb_state_norm(const sb_state* state, double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = state->value.norm();
  });
}

sb_status sb_evolve(const sb_hamiltonian* hamiltonian, const sb_state* psi0, double t,
                    sb_state** out) {
  return guarded([&] {
    require(hamiltonian, "hamiltonian");
    require(psi0, "psi0");
    require(out, "out");
    *out = new sb_state{hamiltonian->propagator.evolve(psi0->value, t)};
  });
}

sb_status sb_occupation(const sb_state* state, const size_t* sites, size_t count,
                        double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    if (count > 0) require(sites, "sites");
    const std::span<const std::size_t> view(sites, count);
    *out = spinbeam::occupation(state->value, view);
  });
}

sb_status sb_packet_center(const sb_network* network, const sb_state* state, const char* leg,
                           double* out) {
  return guarded([&] {
    require(network, "network");
    require(state, "state");
    require(leg, "leg");
    require(out, "out");
    *out = spinbeam::packet_center(network->value, state->value, leg);
  });
}

sb_status sb_packet_variance(const sb_network* network, const sb_state* state,
                             const char* leg, double* out) {
  return guarded([&] {
    require(network, "network");
    require(state, "state");
    require(leg, "leg");
    require(out, "out");
    *out = spinbeam::packet_variance(network->value, state->value, leg);
  });
}

sb_status sb_reflection_factor(const sb_hamiltonian* hamiltonian, const sb_state* psi0,
                               double t0, int M, double* out) {
  return guarded([&] {
    require(hamiltonian, "hamiltonian");
    require(psi0, "psi0");
    require(out, "out");
    *out = spinbeam::reflection_factor(hamiltonian->propagator, psi0->value, t0, M).R;
  });
}

sb_status sb_leg_transmission(const sb_hamiltonian* hamiltonian, const sb_network* network,
                              const sb_state* psi0, double t0, const char* leg, double* out) {
  return guarded([&] {
    require(hamiltonian, "hamiltonian");
    require(network, "network");
    require(psi0, "psi0");
    require(leg, "leg");
    require(out, "out");
    *out = spinbeam::leg_transmission(hamiltonian->propagator, network->value, psi0->value,
                                      t0, leg);
  });
}

sb_status sb_concurrence(const sb_network* network, const sb_state* state, double W,
                         double* out) {
  return guarded([&] {
    require(network, "network");
    require(state, "state");
    require(out, "out");
    *out = spinbeam::concurrence(state->value, network->value, W);
  });
}

sb_status sb_max_concurrence(const sb_hamiltonian* hamiltonian, const sb_network* network,
                             const sb_state* psi0, const double* times, size_t count,
                             double W, double* c_max, double* t_star) {
  return guarded([&] {
    require(hamiltonian, "hamiltonian");
    require(network, "network");
    require(psi0, "psi0");
    require(times, "times");
    require(c_max, "c_max");
    const auto result = spinbeam::max_concurrence(hamiltonian->propagator, network->value,
                                                  psi0->value, {times, count}, W);
    *c_max = result.c_max;
    if (t_star != nullptr) *t_star = result.t_star;
  });
}

sb_status sb_interference(const sb_hamiltonian* hamiltonian, const sb_network* network,
                          const sb_state* psi0, size_t r0, double t0, double* out) {
  return guarded([&] {
    require(hamiltonian, "hamiltonian");
    require(network, "network");
    require(psi0, "psi0");
    require(out, "out");
    *out = spinbeam::interference_intensity(hamiltonian->propagator, network->value,
                                            psi0->value, r0, t0)
               .intensity;
  });
}

sb_status sb_decoupling_report_json(const sb_network* network, char** out) {
  return guarded([&] {
    require(network, "network");
    require(out, "out");
    *out = duplicate(spinbeam::to_json(spinbeam::decoupling_report(network->value)).dump(2));
  });
}

sb_status sb_experiment_run(const char* command, const char* config_json,
                            const char* out_path, const char* format, int threads,
                            char** output) {
  return guarded([&] {
    require(config_json, "config_json");
    std::optional<spinbeam::ExperimentKind> kind;
    if (command != nullptr) {
      kind = spinbeam::parse_kind(command);
      if (!kind) throw spinbeam::ConfigError("command", std::string("unknown '") + command + "'");
    }
    auto config = spinbeam::parse_config(parse_json(config_json, "config"), kind);
    if (out_path != nullptr) config.output_path = out_path;
    if (format != nullptr) {
      const auto parsed = spinbeam::parse_format(format);
      if (!parsed) throw spinbeam::ConfigError("format", "must be csv or json");
      config.format = *parsed;
    }
    if (threads < 1) throw spinbeam::ConfigError("threads", "must be >= 1");
    const std::string text = spinbeam::run_config(config, threads);
    if (config.output_path.empty()) {
      if (output != nullptr) *output = duplicate(text);
    } else {
      spinbeam::write_artifact(config.output_path, text);
      if (output != nullptr) *output = nullptr;
    }
  });
}

sb_status sb_experiment_network(const char* config_json, sb_network** out) {
  return guarded([&] {
    require(config_json, "config_json");
    require(out, "out");
    const auto document = parse_json(config_json, "config");
    if (!document.is_object() || !document.contains("network")) {
      throw spinbeam::ConfigError("network", "missing");
    }
    *out = wrap(spinbeam::build_network(document.at("network")));
  });
}

}  // extern "C"
