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

#ifndef SPINBEAM_OBSERVABLES_HPP
#define SPINBEAM_OBSERVABLES_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "spinbeam/evolution.hpp"
#include "spinbeam/network.hpp"

namespace spinbeam {

struct ReflectionResult {
  double R = 0.0;
  double t0 = 0.0;
  std::vector<std::size_t> domain;  // global ids of (A,1)..(A,M-1)
};

// Probability left in the interior of the input leg, sites 1..M-1, at t0.
// Relies on the input leg occupying global ids 0..M-1, as every builder
// lays it out.
ReflectionResult reflection_factor(const Propagator& propagator, const StateVector& psi0,
                                   double t0, int M);

double leg_transmission(const Propagator& propagator, const SpinNetwork& network,
                        const StateVector& psi0, double t0, std::string_view leg);

// Depths i in [N - round(W), N] (clipped to 1) at the far ends of legs B and C.
std::vector<int> concurrence_window(int N, double W);

// Pairwise concurrence summed over the end window of legs B and C:
//   C = sum_i |<S+_{B,i} S-_{C,i} + h.c.>| = sum_i 2 |Re(conj(psi_{B,i}) psi_{C,i})|
// Requires legs "B" and "C" of equal length. Values are not clamped.
double concurrence(const StateVector& psi, const SpinNetwork& network, double W);

struct ConcurrenceResult {
  std::vector<std::pair<double, double>> series;  // (t, C)
  double c_max = 0.0;
  double t_star = 0.0;
  double window = 0.0;
};

ConcurrenceResult max_concurrence(const Propagator& propagator, const SpinNetwork& network,
                                  const StateVector& psi0, std::span<const double> times,
                                  double W);

struct InterferenceResult {
  int delta = 0;  // N_C - N_B when legs B and C exist
  double intensity = 0.0;
  std::size_t r0 = 0;
  double t0 = 0.0;
};

// |<r0| exp(-iHt0) |psi0>|^2 for a global site id r0 on leg "D".
InterferenceResult interference_intensity(const Propagator& propagator,
                                          const SpinNetwork& network,
                                          const StateVector& psi0, std::size_t r0,
                                          double t0);

// Reflection sweeps evaluate at the instant the packet center reaches the
// middle of the output leg: t0 = (M - n0 + N/2) / (2 J_A).
double default_reflection_time(int M, int N, double n0, double j_a);

// Time at which the ballistic center reaches depth N - W/2 on the output leg.
double concurrence_arrival_time(int M, int N, double n0, double j_a, double W);

// `points` uniform samples over [0.5, 1.5] x concurrence_arrival_time.
std::vector<double> default_concurrence_times(int M, int N, double n0, double j_a,
                                              double W, int points = 400);

}  // namespace spinbeam

#endif  // SPINBEAM_OBSERVABLES_HPP
