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

#include "spinbeam/observables.hpp"

#include <algorithm>
#include <cmath>

#include "spinbeam/error.hpp"

namespace spinbeam {
namespace {

void require_time(double t0) {
  if (!std::isfinite(t0) || t0 < 0.0) {
    throw ValidationError("evaluation time t0 must be finite and >= 0");
  }
}

void require_output_pair(const SpinNetwork& network) {
  if (!network.has_leg("B") || !network.has_leg("C")) {
    throw ValidationError("concurrence needs legs 'B' and 'C'");
  }
  if (network.leg("B").length != network.leg("C").length) {
    throw ValidationError("concurrence needs legs 'B' and 'C' of equal length");
  }
}

}  // namespace

ReflectionResult reflection_factor(const Propagator& propagator, const StateVector& psi0,
                                   double t0, int M) {
  require_time(t0);
  if (M < 1 || static_cast<std::size_t>(M) > propagator.dimension()) {
    throw ValidationError("input leg length M outside the basis");
  }
  ReflectionResult result;
  result.t0 = t0;
  result.domain.resize(static_cast<std::size_t>(M - 1));
  for (std::size_t j = 0; j < result.domain.size(); ++j) result.domain[j] = j;
  result.R = occupation(propagator.evolve(psi0, t0), result.domain);
  return result;
}

double leg_transmission(const Propagator& propagator, const SpinNetwork& network,
                        const StateVector& psi0, double t0, std::string_view leg) {
  require_time(t0);
  const auto sites = network.leg_sites(leg);
  return occupation(propagator.evolve(psi0, t0), sites);
}

std::vector<int> concurrence_window(int N, double W) {
  if (N < 1) throw ValidationError("window needs a leg of at least one site");
  if (!std::isfinite(W) || W < 0.0) throw ValidationError("window width must be >= 0");
  const int first = std::max(1, N - static_cast<int>(std::lround(W)));
  std::vector<int> depths;
  for (int i = first; i <= N; ++i) depths.push_back(i);
  return depths;
}

double concurrence(const StateVector& psi, const SpinNetwork& network, double W) {
  require_output_pair(network);
  if (psi.size() != network.site_count()) {
    throw ValidationError("state dimension does not match network site count");
  }
  const int N = network.leg("B").length;
  double total = 0.0;
  for (int i : concurrence_window(N, W)) {
    const auto b = psi[network.site_index("B", i)];
    const auto c = psi[network.site_index("C", i)];
    total += 2.0 * std::abs((std::conj(b) * c).real());
  }
  return total;
}

ConcurrenceResult max_concurrence(const Propagator& propagator, const SpinNetwork& network,
                                  const StateVector& psi0, std::span<const double> times,
                                  double W) {
  if (times.empty()) throw ValidationError("max_concurrence needs a nonempty time grid");
  require_output_pair(network);
  ConcurrenceResult result;
  result.window = W;
  result.series.reserve(times.size());
  const auto states = propagator.evolve_series(psi0, times);
  for (std::size_t k = 0; k < times.size(); ++k) {
    const double c = concurrence(states[k], network, W);
    result.series.emplace_back(times[k], c);
    if (k == 0 || c > result.c_max) {
      result.c_max = c;
      result.t_star = times[k];
    }
  }
  return result;
}

InterferenceResult interference_intensity(const Propagator& propagator,
                                          const SpinNetwork& network,
                                          const StateVector& psi0, std::size_t r0,
                                          double t0) {
  require_time(t0);
  if (!network.has_leg("D")) throw ValidationError("interference needs an output leg 'D'");
  const auto site = network.locate(r0);
  if (site.leg != "D") {
    throw OutOfRangeError("site id " + std::to_string(r0) + " is not on leg 'D'");
  }
  InterferenceResult result;
  if (network.has_leg("B") && network.has_leg("C")) {
    result.delta = network.leg("C").length - network.leg("B").length;
  }
  result.r0 = r0;
  result.t0 = t0;
  result.intensity = std::norm(propagator.evolve(psi0, t0)[r0]);
  return result;
}

double default_reflection_time(int M, int N, double n0, double j_a) {
  return (M - n0 + N / 2.0) / (2.0 * j_a);
}

double concurrence_arrival_time(int M, int N, double n0, double j_a, double W) {
  // predicted_center(n0, j_a, t, M) = N - W/2
  return (M + N - W / 2.0 - n0) / (2.0 * j_a);
}

std::vector<double> default_concurrence_times(int M, int N, double n0, double j_a,
                                              double W, int points) {
  if (points < 1) throw ValidationError("time grid needs at least one point");
  const double arrival = concurrence_arrival_time(M, N, n0, j_a, W);
  if (!(arrival > 0.0)) throw ValidationError("packet arrival time must be positive");
  const double start = 0.5 * arrival;
  const double stop = 1.5 * arrival;
  std::vector<double> times(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) {
    times[static_cast<std::size_t>(k)] =
        points == 1 ? arrival : start + (stop - start) * k / (points - 1);
  }
  return times;
}

}  // namespace spinbeam
