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

#ifndef SPINBEAM_WAVEPACKET_HPP
#define SPINBEAM_WAVEPACKET_HPP

#include <numbers>
#include <optional>
#include <string>
#include <string_view>

#include "spinbeam/evolution.hpp"
#include "spinbeam/network.hpp"

namespace spinbeam {

struct GaussianPacketSpec {
  std::string leg = "A";
  double n0 = 25.0;     // initial center, in leg site units
  double alpha = 0.3;   // inverse width
  double momentum = std::numbers::pi / 2;
};

// Gaussian packet on one leg:
//
//   psi_{leg,j} = exp(-alpha^2 (j - n0)^2 / 2) exp(-i k j) / sqrt(norm)
//
// with the norm summed over the finite leg and zero amplitude elsewhere.
// With positive hopping and exp(-iHt), this carrier sign gives group
// velocity +2J sin(k), so k = pi/2 runs toward increasing j at speed 2J.
//
// Throws ValidationError for an unknown leg, alpha <= 0, or n0 outside
// [1, leg length].
StateVector gaussian_packet(const SpinNetwork& network, const GaussianPacketSpec& spec);

// Describes the problem if the +-4 sigma amplitude envelope (sigma = 1/alpha)
// spills past the leg at t = 0. This is a warning only; gaussian_packet
// still builds the truncated packet.
std::optional<std::string> packet_support_warning(const SpinNetwork& network,
                                                  const GaussianPacketSpec& spec);

// Mean position sum_j j |psi_{leg,j}|^2 / sum_j |psi_{leg,j}|^2, in 1-based
// leg coordinates. Throws if the leg is unoccupied.
double packet_center(const SpinNetwork& network, const StateVector& psi,
                     std::string_view leg);

// Positional variance on the leg, same weighting as packet_center.
double packet_variance(const SpinNetwork& network, const StateVector& psi,
                       std::string_view leg);

// Ballistic center on an output leg after crossing a node at the end of an
// input leg of length input_length: n0 + 2 t J_A - M.
double predicted_center(double n0, double j_a, double t, int input_length);

// Packet window W = 4 sqrt(ln 2) / alpha.
double packet_window(double alpha);

}  // namespace spinbeam

#endif  // SPINBEAM_WAVEPACKET_HPP
