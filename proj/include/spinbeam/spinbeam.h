/*
 * Copyright 2026 The spinbeam Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SPINBEAM_SPINBEAM_H
#define SPINBEAM_SPINBEAM_H

/*
 * C interface to the spinbeam core.
 *
 * Every function returns an sb_status. On failure, sb_last_error() returns a
 * message for the calling thread that stays valid until the next call on that
 * thread. Handles are opaque and owned by the caller; release them with the
 * matching *_free function (passing NULL is a no-op). Strings returned
 * through char** are heap-allocated and released with sb_string_free.
 *
 * Site ids are 0-based global indices; leg positions are 1-based.
 */

#include <stddef.h>

#if defined(_WIN32)
#if defined(SPINBEAM_BUILDING)
#define SB_API __declspec(dllexport)
#else
#define SB_API __declspec(dllimport)
#endif
#else
#define SB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sb_status {
  SB_OK = 0,
  SB_ERR_INVALID_ARGUMENT = 1,
  SB_ERR_CONFIG = 2,
  SB_ERR_NUMERICAL = 3,
  SB_ERR_IO = 4,
  SB_ERR_OUT_OF_RANGE = 5,
  SB_ERR_INTERNAL = 6
} sb_status;

typedef struct sb_network sb_network;
typedef struct sb_hamiltonian sb_hamiltonian;
typedef struct sb_state sb_state;

SB_API const char* sb_version(void);
SB_API const char* sb_last_error(void);
SB_API const char* sb_status_name(sb_status status);
SB_API void sb_string_free(char* text);

/* network-model */
SB_API sb_status sb_network_star(int m, int M, int N, double J, double j_node,
                                 sb_network** out);
SB_API sb_status sb_network_ybeam(int M, int n_b, int n_c, double j_a, double j_b,
                                  double j_c, double j_nb, double j_nc, sb_network** out);
SB_API sb_status sb_network_interferometer(int n_a, int n_b, int delta, int n_d, double J,
                                           double j_node, sb_network** out);
/* Builds from a JSON "network" block ({"topology": ..., parameters}). */
SB_API sb_status sb_network_from_json(const char* network_json, sb_network** out);
SB_API void sb_network_free(sb_network* network);
SB_API sb_status sb_network_site_count(const sb_network* network, size_t* out);
SB_API sb_status sb_network_site_index(const sb_network* network, const char* leg,
                                       int position, size_t* out);
/* *ok = 1 when valid; otherwise violations are joined by newlines in *report. */
SB_API sb_status sb_network_validate(const sb_network* network, int* ok, char** report);

/* hamiltonian (the eigendecomposition is computed on creation) */
SB_API sb_status sb_hamiltonian_create(const sb_network* network, sb_hamiltonian** out);
SB_API void sb_hamiltonian_free(sb_hamiltonian* hamiltonian);
SB_API sb_status sb_hamiltonian_dimension(const sb_hamiltonian* hamiltonian, size_t* out);
SB_API sb_status sb_hamiltonian_entry(const sb_hamiltonian* hamiltonian, size_t row,
                                      size_t col, double* out);
/* Writes `dimension` ascending eigenvalues into `out`. */
SB_API sb_status sb_hamiltonian_eigenvalues(const sb_hamiltonian* hamiltonian, double* out,
                                            size_t capacity);
/* "row,col,value" CSV of nonzero entries. */
SB_API sb_status sb_hamiltonian_write_csv(const sb_hamiltonian* hamiltonian,
                                          const char* path);

/* wavepacket and evolution */
SB_API sb_status sb_state_gaussian(const sb_network* network, const char* leg, double n0,
                                   double alpha, double momentum, sb_state** out);
SB_API sb_status sb_state_basis(size_t dimension, size_t site, sb_state** out);
SB_API void sb_state_free(sb_state* state);
SB_API sb_status sb_state_size(const sb_state* state, size_t* out);
SB_API sb_status sb_state_amplitude(const sb_state* state, size_t site, double* re,
                                    double* im);
SB_API sb_status sb_state_norm(const sb_state* state, double* out);
SB_API sb_status sb_evolve(const sb_hamiltonian* hamiltonian, const sb_state* psi0, double t,
                           sb_state** out);
SB_API sb_status sb_occupation(const sb_state* state, const size_t* sites, size_t count,
                               double* out);
SB_API sb_status sb_packet_center(const sb_network* network, const sb_state* state,
                                  const char* leg, double* out);
SB_API sb_status sb_packet_variance(const sb_network* network, const sb_state* state,
                                    const char* leg, double* out);

/* observables */
SB_API sb_status sb_reflection_factor(const sb_hamiltonian* hamiltonian, const sb_state* psi0,
                                      double t0, int M, double* out);
SB_API sb_status sb_leg_transmission(const sb_hamiltonian* hamiltonian,
                                     const sb_network* network, const sb_state* psi0,
                                     double t0, const char* leg, double* out);
SB_API sb_status sb_concurrence(const sb_network* network, const sb_state* state, double W,
                                double* out);
/* Maximum over `times` (ascending); *t_star receives the argmax time. */
SB_API sb_status sb_max_concurrence(const sb_hamiltonian* hamiltonian,
                                    const sb_network* network, const sb_state* psi0,
                                    const double* times, size_t count, double W,
                                    double* c_max, double* t_star);
SB_API sb_status sb_interference(const sb_hamiltonian* hamiltonian, const sb_network* network,
                                 const sb_state* psi0, size_t r0, double t0, double* out);

/* virtual-transform */
SB_API sb_status sb_decoupling_report_json(const sb_network* network, char** out);

/* experiments */
/*
 * Runs a JSON experiment config. `command` is a subcommand name or NULL to
 * use observable.kind. `out_path` and `format` ("csv"/"json") override the
 * config's output block when non-NULL. When the resolved output path is
 * empty the artifact is returned through *output (if non-NULL); otherwise it
 * is written to that path.
 */
SB_API sb_status sb_experiment_run(const char* command, const char* config_json,
                                   const char* out_path, const char* format, int threads,
                                   char** output);
/* Network described by a config document's "network" block. */
SB_API sb_status sb_experiment_network(const char* config_json, sb_network** out);

#ifdef __cplusplus
}
#endif

#endif /* SPINBEAM_SPINBEAM_H */
