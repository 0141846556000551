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

#include "spinbeam/wavepacket.hpp"

#include <cmath>
#include <complex>

#include "spinbeam/error.hpp"

namespace spinbeam {
namespace {

struct LegMoments {
  double weight = 0.0;
  double first = 0.0;
  double second = 0.0;
};

LegMoments leg_moments(const SpinNetwork& network, const StateVector& psi,
                       std::string_view leg) {
  if (psi.size() != network.site_count()) {
    throw ValidationError("state dimension does not match network site count");
  }
  const auto& spec = network.leg(leg);
  const std::size_t offset = network.leg_offset(leg);
  LegMoments m;
  for (int j = 1; j <= spec.length; ++j) {
    const double p = std::norm(psi[offset + static_cast<std::size_t>(j - 1)]);
    m.weight += p;
    m.first += p * j;
    m.second += p * j * j;
  }
  if (m.weight <= 0.0) {
    throw ValidationError("leg '" + std::string(leg) + "' carries no occupation");
  }
  return m;
}

}  // namespace

StateVector gaussian_packet(const SpinNetwork& network, const GaussianPacketSpec& spec) {
  if (!network.has_leg(spec.leg)) {
    throw ValidationError("unknown leg '" + spec.leg + "' for packet");
  }
  if (!std::isfinite(spec.alpha) || spec.alpha <= 0.0) {
    throw ValidationError("packet alpha must be > 0");
  }
  if (!std::isfinite(spec.momentum)) throw ValidationError("packet momentum must be finite");
  const auto& leg = network.leg(spec.leg);
  if (!std::isfinite(spec.n0) || spec.n0 < 1.0 || spec.n0 > leg.length) {
    throw ValidationError("packet center n0 must lie within leg '" + spec.leg + "' [1, " +
                          std::to_string(leg.length) + "]");
  }

  Eigen::VectorXcd amplitudes =
      Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(network.site_count()));
  const std::size_t offset = network.leg_offset(spec.leg);
  const double a2 = spec.alpha * spec.alpha;
  for (int j = 1; j <= leg.length; ++j) {
    const double x = j - spec.n0;
    const double envelope = std::exp(-0.5 * a2 * x * x);
    const double phase = -spec.momentum * j;
    amplitudes(static_cast<Eigen::Index>(offset) + j - 1) =
        envelope * std::complex<double>(std::cos(phase), std::sin(phase));
  }
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw NumericalError("packet envelope underflowed on the whole leg");
  amplitudes /= norm;
  return StateVector(std::move(amplitudes));
}

std::optional<std::string> packet_support_warning(const SpinNetwork& network,
                                                  const GaussianPacketSpec& spec) {
  const auto& leg = network.leg(spec.leg);
  const double reach = 4.0 / spec.alpha;
  if (spec.n0 - reach < 1.0 || spec.n0 + reach > leg.length) {
    return "packet +-4 sigma support [" + std::to_string(spec.n0 - reach) + ", " +
           std::to_string(spec.n0 + reach) + "] exceeds leg '" + spec.leg + "' [1, " +
           std::to_string(leg.length) + "]";
  }
  return std::nullopt;
}

double packet_center(const SpinNetwork& network, const StateVector& psi,
                     std::string_view leg) {
  const auto m = leg_moments(network, psi, leg);
  return m.first / m.weight;
}

double packet_variance(const SpinNetwork& network, const StateVector& psi,
                       std::string_view leg) {
  const auto m = leg_moments(network, psi, leg);
  const double mean = m.first / m.weight;
  return m.second / m.weight - mean * mean;
}

double predicted_center(double n0, double j_a, double t, int input_length) {
  return n0 + 2.0 * t * j_a - input_length;
}

double packet_window(double alpha) {
  return 4.0 * std::sqrt(std::log(2.0)) / alpha;
}

}  // namespace spinbeam
