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

#ifndef SPINBEAM_TESTS_ORACLES_HPP
#define SPINBEAM_TESTS_ORACLES_HPP

// Reference computations that share no code with the library's spectral
// propagator: a classical RK4 integrator of i dpsi/dt = H psi and a scaled
// Taylor series for exp(-iHt). Hamiltonians are rebuilt from edge lists by
// hand so the builders are checked too.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

struct Bond {
  int a;
  int b;
  double weight;
};

inline Eigen::MatrixXd from_bonds(int dimension, const std::vector<Bond>& bonds) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dimension, dimension);
  for (const auto& bond : bonds) {
    h(bond.a, bond.b) += bond.weight;
    h(bond.b, bond.a) += bond.weight;
  }
  return h;
}

// Open chain of `length` sites starting at `offset`.
inline void chain(std::vector<Bond>& bonds, int offset, int length, double J) {
  for (int j = 0; j + 1 < length; ++j) bonds.push_back({offset + j, offset + j + 1, J});
}

inline Eigen::VectorXcd rk4(const Eigen::MatrixXd& h, Eigen::VectorXcd psi, double t,
                            int steps) {
  const Complex minus_i(0.0, -1.0);
  const double dt = t / steps;
  auto f = [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd {
    return minus_i * (h.cast<Complex>() * v);
  };
  for (int s = 0; s < steps; ++s) {
    const Eigen::VectorXcd k1 = f(psi);
    const Eigen::VectorXcd k2 = f(psi + 0.5 * dt * k1);
    const Eigen::VectorXcd k3 = f(psi + 0.5 * dt * k2);
    const Eigen::VectorXcd k4 = f(psi + dt * k3);
    psi += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return psi;
}

// exp(-iHt) by scaling and squaring a truncated Taylor series.
inline Eigen::MatrixXcd expm_taylor(const Eigen::MatrixXd& h, double t) {
  const Eigen::Index n = h.rows();
  const Eigen::MatrixXcd a = Complex(0.0, -t) * h.cast<Complex>();
  const double scale = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (scale / std::pow(2.0, squarings) > 0.25) ++squarings;
  const Eigen::MatrixXcd b = a / std::pow(2.0, squarings);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = term * b / static_cast<double>(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

inline Eigen::VectorXcd random_state(int dimension, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::VectorXcd v(dimension);
  for (int i = 0; i < dimension; ++i) v(i) = Complex(normal(rng), normal(rng));
  return v / v.norm();
}

}  // namespace oracle

#endif  // SPINBEAM_TESTS_ORACLES_HPP
