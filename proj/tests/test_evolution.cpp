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
#include <random>

#include "oracles.hpp"
#include "spinbeam/error.hpp"
#include "spinbeam/evolution.hpp"

using namespace spinbeam;

namespace {

double max_diff(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("evolution agrees with an RK4 integrator on small networks") {
  std::mt19937_64 rng(7);
  const SpinNetwork nets[] = {
      build_ybeam(6, 5, 5, 1.0, 1.0, 1.0, 0.6, 0.8),
      build_star(3, 5, 4, 1.0, 1.0 / std::sqrt(3.0)),
      build_interferometer(4, 3, 2, 4, 1.0, 0.7),
  };
  for (const auto& net : nets) {
    const auto h = single_excitation_hamiltonian(net);
    REQUIRE(h.dimension() <= 20);
    const Propagator propagator(h);
    const StateVector psi0(oracle::random_state(static_cast<int>(h.dimension()), rng));
    for (double t : {0.3, 2.0, 7.5}) {
      const auto exact = propagator.evolve(psi0, t);
      const auto reference = oracle::rk4(h.matrix(), psi0.amplitudes(), t, 4000);
      CHECK(max_diff(exact.amplitudes(), reference) <= 1e-6);
    }
  }
}

TEST_CASE("evolution agrees with a Taylor-series matrix exponential") {
  const auto h = single_excitation_hamiltonian(build_ybeam(5, 4, 4, 1.0, 0.9, 1.1, 0.5, 0.7));
  const Propagator propagator(h);
  const auto psi0 = StateVector::basis(h.dimension(), 2);
  const double t = 4.2;
  const Eigen::VectorXcd reference = oracle::expm_taylor(h.matrix(), t) * psi0.amplitudes();
  CHECK(max_diff(propagator.evolve(psi0, t).amplitudes(), reference) <= 1e-10);
}

TEST_CASE("two-site transfer follows cos and -i sin") {
  SpinNetwork dimer({{"A", 2, 0.8}}, {});
  const Propagator propagator(single_excitation_hamiltonian(dimer));
  const double t = 1.3;
  const auto psi = propagator.evolve(StateVector::basis(2, 0), t);
  CHECK(std::abs(psi[0] - std::complex<double>(std::cos(0.8 * t), 0.0)) <= 1e-14);
  CHECK(std::abs(psi[1] - std::complex<double>(0.0, -std::sin(0.8 * t))) <= 1e-14);
}

TEST_CASE("evolution is unitary and conserves energy") {
  const auto h = single_excitation_hamiltonian(build_star(4, 30, 30, 1.0, 0.5));
  const Propagator propagator(h);
  std::mt19937_64 rng(11);
  const StateVector psi0(oracle::random_state(static_cast<int>(h.dimension()), rng));
  const double e0 = energy(h, psi0);
  for (double t : {1.0, 50.0, 500.0}) {
    const auto psi = propagator.evolve(psi0, t);
    CHECK(std::abs(psi.norm() - 1.0) <= 1e-10);
    CHECK(std::abs(energy(h, psi) - e0) <= 1e-10);
  }
}

TEST_CASE("time zero returns the input state exactly") {
  const auto h = single_excitation_hamiltonian(build_ybeam(4, 3, 3, 1.0, 1.0, 1.0, 0.6, 0.8));
  std::mt19937_64 rng(3);
  const StateVector psi0(oracle::random_state(static_cast<int>(h.dimension()), rng));
  const Propagator propagator(h);
  CHECK(propagator.evolve(psi0, 0.0).amplitudes() == psi0.amplitudes());
  const double times[] = {0.0, 1.0};
  CHECK(propagator.evolve_series(psi0, times)[0].amplitudes() == psi0.amplitudes());
}

TEST_CASE("evolving forward then backward returns the input") {
  const auto h = single_excitation_hamiltonian(build_interferometer(6, 5, -2, 6, 1.0, 0.7));
  const Propagator propagator(h);
  const auto psi0 = StateVector::basis(h.dimension(), 3);
  const auto back = propagator.evolve(propagator.evolve(psi0, 17.0), -17.0);
  CHECK(max_diff(back.amplitudes(), psi0.amplitudes()) <= 1e-12);
}

TEST_CASE("evolve_series matches pointwise evolution") {
  const auto h = single_excitation_hamiltonian(build_ybeam(5, 4, 4, 1.0, 1.0, 1.0, 0.6, 0.8));
  const Propagator propagator(h);
  const auto psi0 = StateVector::basis(h.dimension(), 0);
  const std::vector<double> times{0.5, 1.5, 1.5, 9.0};
  const auto series = propagator.evolve_series(psi0, times);
  REQUIRE(series.size() == times.size());
  for (std::size_t k = 0; k < times.size(); ++k) {
    CHECK(max_diff(series[k].amplitudes(), propagator.evolve(psi0, times[k]).amplitudes()) ==
          0.0);
  }
}

TEST_CASE("evolve_series rejects empty and descending grids") {
  const auto h = single_excitation_hamiltonian(build_ybeam(3, 2, 2, 1.0, 1.0, 1.0, 0.6, 0.8));
  const Propagator propagator(h);
  const auto psi0 = StateVector::basis(h.dimension(), 0);
  CHECK_THROWS_AS(propagator.evolve_series(psi0, std::vector<double>{}), ValidationError);
  CHECK_THROWS_AS(propagator.evolve_series(psi0, std::vector<double>{2.0, 1.0}),
                  ValidationError);
}

TEST_CASE("dimension mismatches are rejected") {
  const auto h = single_excitation_hamiltonian(build_ybeam(3, 2, 2, 1.0, 1.0, 1.0, 0.6, 0.8));
  CHECK_THROWS_AS(evolve(h, StateVector::basis(3, 0), 1.0), ValidationError);
  CHECK_THROWS_AS(StateVector::basis(3, 3), OutOfRangeError);
}

TEST_CASE("occupation counts each site once and checks bounds") {
  Eigen::VectorXcd a(3);
  a << 0.6, std::complex<double>(0.0, 0.8), 0.0;
  const StateVector psi(a);
  const std::vector<std::size_t> both{0, 1, 1};
  CHECK(occupation(psi, both) == doctest::Approx(1.0));
  CHECK(occupation(psi, std::vector<std::size_t>{}) == 0.0);
  CHECK_THROWS_AS(occupation(psi, std::vector<std::size_t>{3}), OutOfRangeError);
}
