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

#ifndef SPINBEAM_EVOLUTION_HPP
#define SPINBEAM_EVOLUTION_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "spinbeam/hamiltonian.hpp"

namespace spinbeam {

// Amplitudes over the single-excitation basis |j> = S+_j |all down>, indexed
// by global site id.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(Eigen::VectorXcd amplitudes) : amplitudes_(std::move(amplitudes)) {}

  static StateVector basis(std::size_t dimension, std::size_t site);

  std::size_t size() const noexcept { return static_cast<std::size_t>(amplitudes_.size()); }
  const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
  std::complex<double> operator[](std::size_t i) const {
    return amplitudes_(static_cast<Eigen::Index>(i));
  }
  double norm() const { return amplitudes_.norm(); }
  Eigen::VectorXd probabilities() const { return amplitudes_.cwiseAbs2(); }

 private:
  Eigen::VectorXcd amplitudes_;
};

// Exact propagator exp(-iHt) = V exp(-i Lambda t) V^T from one shared
// eigensystem. Immutable, so one instance can serve many threads.
class Propagator {
 public:
  explicit Propagator(const Hamiltonian& hamiltonian);
  explicit Propagator(EigenSystem eigensystem);

  std::size_t dimension() const noexcept {
    return static_cast<std::size_t>(eigen_.eigenvalues.size());
  }
  const EigenSystem& eigensystem() const noexcept { return eigen_; }

  StateVector evolve(const StateVector& psi0, double t) const;
  // Element k is evolve(psi0, times[k]); times must be non-decreasing.
  std::vector<StateVector> evolve_series(const StateVector& psi0,
                                         std::span<const double> times) const;

 private:
  Eigen::VectorXcd to_eigenbasis(const StateVector& psi0) const;
  StateVector from_eigenbasis(const Eigen::VectorXcd& coefficients, double t) const;

  EigenSystem eigen_;
};

StateVector evolve(const Hamiltonian& hamiltonian, const StateVector& psi0, double t);
std::vector<StateVector> evolve_series(const Hamiltonian& hamiltonian,
                                       const StateVector& psi0,
                                       std::span<const double> times);

// Sum of |psi_j|^2 over a set of site ids. Repeated ids count once.
double occupation(const StateVector& psi, std::span<const std::size_t> sites);

// <psi|H|psi>
double energy(const Hamiltonian& hamiltonian, const StateVector& psi);

}  // namespace spinbeam

#endif  // SPINBEAM_EVOLUTION_HPP
