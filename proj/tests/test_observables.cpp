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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spinbeam/error.hpp"
#include "spinbeam/observables.hpp"
#include "spinbeam/wavepacket.hpp"

using namespace spinbeam;

namespace {

const GaussianPacketSpec kPacket{"A", 25.0, 0.3, std::numbers::pi / 2};

// Hamiltonian of `network` with the bond between two sites negated.
Hamiltonian flip_bond(const SpinNetwork& network, std::size_t a, std::size_t b) {
  Eigen::MatrixXd h = single_excitation_hamiltonian(network).matrix();
  const auto i = static_cast<Eigen::Index>(a);
  const auto j = static_cast<Eigen::Index>(b);
  REQUIRE(h(i, j) != 0.0);
  h(i, j) = -h(i, j);
  h(j, i) = -h(j, i);
  return Hamiltonian(std::move(h));
}

}  // namespace

TEST_CASE("reflection factor is the occupation of A sites 1..M-1") {
  const auto net = build_ybeam(10, 5, 5, 1.0, 1.0, 1.0, 0.6, 0.8);
  const Propagator propagator(single_excitation_hamiltonian(net));
  const auto psi0 = gaussian_packet(net, {"A", 5.0, 0.6, std::numbers::pi / 2});
  const auto result = reflection_factor(propagator, psi0, 0.0, 10);
  CHECK(result.domain.size() == 9);
  CHECK(result.R == doctest::Approx(1.0 - std::norm(psi0[9])));
  CHECK_THROWS_AS(reflection_factor(propagator, psi0, -1.0, 10), ValidationError);
}

TEST_CASE("matched ybeam barely reflects; a weak node reflects strongly") {
  const auto t0 = default_reflection_time(50, 50, 25.0, 1.0);
  CHECK(t0 == doctest::Approx(25.0));
  const auto matched = build_ybeam(50, 50, 50, 1.0, 1.0, 1.0, 0.6, 0.8);
  const auto weak = build_ybeam(50, 50, 50, 1.0, 1.0, 1.0, 0.2, 0.2);
  const auto r_matched = reflection_factor(Propagator(single_excitation_hamiltonian(matched)),
                                           gaussian_packet(matched, kPacket), t0, 50);
  const auto r_weak = reflection_factor(Propagator(single_excitation_hamiltonian(weak)),
                                        gaussian_packet(weak, kPacket), t0, 50);
  CHECK(r_matched.R < 0.01);
  CHECK(r_weak.R > 0.5);
}

TEST_CASE("transmissions and reflection account for the whole packet") {
  const auto net = build_ybeam(50, 50, 50, 1.0, 1.0, 1.0, 0.6, 0.8);
  const Propagator propagator(single_excitation_hamiltonian(net));
  const auto psi0 = gaussian_packet(net, kPacket);
  const double t0 = 25.0;
  const double a = leg_transmission(propagator, net, psi0, t0, "A");
  const double b = leg_transmission(propagator, net, psi0, t0, "B");
  const double c = leg_transmission(propagator, net, psi0, t0, "C");
  CHECK(a + b + c == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b / (b + c) == doctest::Approx(0.36).epsilon(0.02));
}

TEST_CASE("concurrence window covers depths N - round(W) .. N") {
  CHECK(concurrence_window(50, 11.1) == std::vector<int>{39, 40, 41, 42, 43, 44, 45, 46, 47, 48,
                                                          49, 50});
  CHECK(concurrence_window(5, 40.0).front() == 1);
  CHECK(concurrence_window(5, 0.0) == std::vector<int>{5});
  CHECK_THROWS_AS(concurrence_window(0, 1.0), ValidationError);
}

TEST_CASE("concurrence of a hand-built split state") {
  const auto net = build_ybeam(3, 4, 4, 1.0, 1.0, 1.0, 0.6, 0.8);
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(net.site_count()));
  // amplitudes 0.6 on B4 and 0.8 on C4, in phase
  a(static_cast<Eigen::Index>(net.site_index("B", 4))) = 0.6;
  a(static_cast<Eigen::Index>(net.site_index("C", 4))) = 0.8;
  const StateVector psi(a);
  CHECK(concurrence(psi, net, 0.0) == doctest::Approx(2 * 0.6 * 0.8));
  // a relative phase of pi/2 leaves no real overlap
  a(static_cast<Eigen::Index>(net.site_index("C", 4))) = std::complex<double>(0.0, 0.8);
  CHECK(concurrence(StateVector(a), net, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("concurrence requires equal output legs") {
  const auto net = build_ybeam(3, 4, 5, 1.0, 1.0, 1.0, 0.6, 0.8);
  CHECK_THROWS_AS(concurrence(StateVector::basis(net.site_count(), 0), net, 1.0),
                  ValidationError);
}

TEST_CASE("symmetric split maximizes concurrence") {
  const double W = packet_window(0.3);
  const auto times = default_concurrence_times(50, 50, 25.0, 1.0, W, 200);
  auto c_max = [&](double j_nb, double j_nc) {
    const auto net = build_ybeam(50, 50, 50, 1.0, 1.0, 1.0, j_nb, j_nc);
    return max_concurrence(Propagator(single_excitation_hamiltonian(net)), net,
                           gaussian_packet(net, kPacket), times, W);
  };
  const auto symmetric = c_max(std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2);
  const auto lopsided = c_max(1.2, 0.2);
  CHECK(symmetric.c_max > 0.95);
  CHECK(symmetric.c_max > lopsided.c_max);
  CHECK(symmetric.series.size() == times.size());
  CHECK(symmetric.t_star >= times.front());
  CHECK(symmetric.t_star <= times.back());
}

TEST_CASE("interference intensity reads leg D only") {
  const auto net = build_interferometer(10, 6, 0, 6, 1.0, std::numbers::sqrt2 / 2);
  const Propagator propagator(single_excitation_hamiltonian(net));
  const auto psi0 = gaussian_packet(net, {"A", 5.0, 0.5, std::numbers::pi / 2});
  const auto r0 = net.site_index("D", 3);
  const auto result = interference_intensity(propagator, net, psi0, r0, 4.0);
  CHECK(result.delta == 0);
  CHECK(result.intensity == doctest::Approx(std::norm(propagator.evolve(psi0, 4.0)[r0])));
  CHECK_THROWS_AS(interference_intensity(propagator, net, psi0, 0, 4.0), OutOfRangeError);
}

TEST_CASE("swapping the interferometer arms leaves the pattern unchanged") {
  const double j = std::numbers::sqrt2 / 2;
  for (int delta : {2, 5}) {
    const auto a = build_interferometer(12, 8, delta, 10, 1.0, j);
    const auto b = build_interferometer(12, 8 + delta, -delta, 10, 1.0, j);
    const GaussianPacketSpec spec{"A", 6.0, 0.5, std::numbers::pi / 2};
    for (double t : {8.0, 15.0}) {
      const double ia = interference_intensity(Propagator(single_excitation_hamiltonian(a)), a,
                                               gaussian_packet(a, spec), a.site_index("D", 4), t)
                            .intensity;
      const double ib = interference_intensity(Propagator(single_excitation_hamiltonian(b)), b,
                                               gaussian_packet(b, spec), b.site_index("D", 4), t)
                            .intensity;
      CHECK(std::abs(ia - ib) <= 1e-12);
    }
  }
}

TEST_CASE("on a tree, flipping any single node bond is a gauge") {
  const auto net = build_ybeam(50, 50, 50, 1.0, 1.0, 1.0, 1.2, 0.2);
  const auto psi0 = gaussian_packet(net, kPacket);
  const Propagator plain(single_excitation_hamiltonian(net));
  const Propagator flipped(flip_bond(net, net.site_index("A", 50), net.site_index("C", 1)));
  CHECK(std::abs(reflection_factor(plain, psi0, 25.0, 50).R -
                 reflection_factor(flipped, psi0, 25.0, 50).R) <= 1e-12);
  for (const char* leg : {"B", "C"}) {
    CHECK(std::abs(leg_transmission(plain, net, psi0, 25.0, leg) -
                   leg_transmission(flipped, net, psi0, 25.0, leg)) <= 1e-12);
  }
}

TEST_CASE("in the interferometer loop, one flipped bond is a pi flux") {
  const auto net = build_interferometer(50, 50, 0, 50, 1.0, std::numbers::sqrt2 / 2);
  const auto psi0 = gaussian_packet(net, kPacket);
  const Propagator plain(single_excitation_hamiltonian(net));
  const Propagator flux(flip_bond(net, net.site_index("D", 1), net.site_index("C", 50)));
  const double t = 50.0;
  const double through = leg_transmission(plain, net, psi0, t, "D");
  const double blocked = leg_transmission(flux, net, psi0, t, "D");
  CHECK(through > 0.98);
  CHECK(blocked < 0.05);
}

TEST_CASE("default time grids") {
  const double W = packet_window(0.3);
  const double arrival = concurrence_arrival_time(50, 50, 25.0, 1.0, W);
  CHECK(arrival == doctest::Approx((75.0 - W / 2) / 2));
  const auto times = default_concurrence_times(50, 50, 25.0, 1.0, W, 5);
  CHECK(times.size() == 5);
  CHECK(times.front() == doctest::Approx(0.5 * arrival));
  CHECK(times.back() == doctest::Approx(1.5 * arrival));
}
