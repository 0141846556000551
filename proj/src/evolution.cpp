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

#include "spinbeam/evolution.hpp"

#include <cmath>
#include <string>

#include "spinbeam/error.hpp"

namespace spinbeam {
namespace {

// Real matrix times complex vector without promoting the matrix.
template <typename Matrix>
Eigen::VectorXcd apply_real(const Matrix& m, const Eigen::VectorXcd& v) {
  const Eigen::VectorXd re = m * v.real();
  const Eigen::VectorXd im = m * v.imag();
  Eigen::VectorXcd out(re.size());
  out.real() = re;
  out.imag() = im;
  return out;
}

}  // namespace

StateVector StateVector::basis(std::size_t dimension, std::size_t site) {
  if (site >= dimension) {
    throw OutOfRangeError("site id " + std::to_string(site) + " outside basis of size " +
                          std::to_string(dimension));
  }
  Eigen::VectorXcd amplitudes = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dimension));
  amplitudes(static_cast<Eigen::Index>(site)) = 1.0;
  return StateVector(std::move(amplitudes));
}

Propagator::Propagator(const Hamiltonian& hamiltonian)
    : eigen_(spectral_decompose(hamiltonian)) {}

Propagator::Propagator(EigenSystem eigensystem) : eigen_(std::move(eigensystem)) {
  if (eigen_.eigenvectors.rows() != eigen_.eigenvalues.size() ||
      eigen_.eigenvectors.cols() != eigen_.eigenvalues.size()) {
    throw ValidationError("eigensystem shape mismatch");
  }
}

Eigen::VectorXcd Propagator::to_eigenbasis(const StateVector& psi0) const {
  if (psi0.size() != dimension()) {
    throw ValidationError("state dimension " + std::to_string(psi0.size()) +
                          " does not match Hamiltonian dimension " +
                          std::to_string(dimension()));
  }
  return apply_real(eigen_.eigenvectors.transpose(), psi0.amplitudes());
}

StateVector Propagator::from_eigenbasis(const Eigen::VectorXcd& coefficients,
                                        double t) const {
  if (t == 0.0) return StateVector(apply_real(eigen_.eigenvectors, coefficients));
  Eigen::VectorXcd phased(coefficients.size());
  for (Eigen::Index k = 0; k < coefficients.size(); ++k) {
    const double angle = -eigen_.eigenvalues(k) * t;
    phased(k) = coefficients(k) * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return StateVector(apply_real(eigen_.eigenvectors, phased));
}

StateVector Propagator::evolve(const StateVector& psi0, double t) const {
  if (!std::isfinite(t)) throw ValidationError("evolution time must be finite");
  // t = 0 returns the input bit-for-bit rather than V V^T psi0.
  if (t == 0.0) {
    (void)to_eigenbasis(psi0);
    return psi0;
  }
  return from_eigenbasis(to_eigenbasis(psi0), t);
}

std::vector<StateVector> Propagator::evolve_series(const StateVector& psi0,
                                                   std::span<const double> times) const {
  if (times.empty()) throw ValidationError("evolve_series needs at least one time");
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (!std::isfinite(times[k])) throw ValidationError("evolution times must be finite");
    if (k > 0 && times[k] < times[k - 1]) {
      throw ValidationError("evolve_series times must be ascending (index " +
                            std::to_string(k) + ")");
    }
  }
  const Eigen::VectorXcd coefficients = to_eigenbasis(psi0);
  std::vector<StateVector> series;
  series.reserve(times.size());
  for (double t : times) {
    series.push_back(t == 0.0 ? psi0 : from_eigenbasis(coefficients, t));
  }
  return series;
}

StateVector evolve(const Hamiltonian& hamiltonian, const StateVector& psi0, double t) {
  return Propagator(hamiltonian).evolve(psi0, t);
}

std::vector<StateVector> evolve_series(const Hamiltonian& hamiltonian,
                                       const StateVector& psi0,
                                       std::span<const double> times) {
  return Propagator(hamiltonian).evolve_series(psi0, times);
}

double occupation(const StateVector& psi, std::span<const std::size_t> sites) {
  std::vector<bool> counted(psi.size(), false);
  double total = 0.0;
  for (std::size_t site : sites) {
    if (site >= psi.size()) {
      throw OutOfRangeError("site id " + std::to_string(site) + " outside basis of size " +
                            std::to_string(psi.size()));
    }
    if (counted[site]) continue;
    counted[site] = true;
    total += std::norm(psi[site]);
  }
  return total;
}

double energy(const Hamiltonian& hamiltonian, const StateVector& psi) {
  if (psi.size() != hamiltonian.dimension()) {
    throw ValidationError("state dimension does not match Hamiltonian dimension");
  }
  const Eigen::VectorXcd h_psi = apply_real(hamiltonian.matrix(), psi.amplitudes());
  return psi.amplitudes().dot(h_psi).real();
}

}  // namespace spinbeam
