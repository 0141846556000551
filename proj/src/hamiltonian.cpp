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

#include "spinbeam/hamiltonian.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <string>

#include "spinbeam/error.hpp"

namespace spinbeam {

Hamiltonian::Hamiltonian(Eigen::MatrixXd matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw ValidationError("Hamiltonian must be square, got " +
                          std::to_string(matrix_.rows()) + "x" +
                          std::to_string(matrix_.cols()));
  }
  if (!matrix_.allFinite()) throw ValidationError("Hamiltonian has non-finite entries");
}

double Hamiltonian::max_abs_entry() const {
  return matrix_.size() == 0 ? 0.0 : matrix_.cwiseAbs().maxCoeff();
}

double Hamiltonian::asymmetry() const {
  return matrix_.size() == 0 ? 0.0 : (matrix_ - matrix_.transpose()).cwiseAbs().maxCoeff();
}

std::size_t Hamiltonian::bond_count() const {
  std::size_t count = 0;
  for (Eigen::Index i = 0; i < matrix_.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < matrix_.cols(); ++j) {
      if (matrix_(i, j) != 0.0) ++count;
    }
  }
  return count;
}

void Hamiltonian::write_triplets_csv(std::ostream& out) const {
  out << "row,col,value\n";
  char buf[32];
  for (Eigen::Index i = 0; i < matrix_.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix_.cols(); ++j) {
      if (matrix_(i, j) == 0.0) continue;
      auto res = std::to_chars(buf, buf + sizeof buf, matrix_(i, j));
      out << i << ',' << j << ',' << std::string_view(buf, res.ptr - buf) << '\n';
    }
  }
}

Hamiltonian single_excitation_hamiltonian(const SpinNetwork& network) {
  const auto report = network.validate();
  if (!report.ok()) {
    throw ValidationError("invalid network: " + report.violations.front());
  }
  const auto n = static_cast<Eigen::Index>(network.site_count());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : network.edges()) {
    const auto a = static_cast<Eigen::Index>(e.a);
    const auto b = static_cast<Eigen::Index>(e.b);
    h(a, b) = e.weight;
    h(b, a) = e.weight;
  }
  return Hamiltonian(std::move(h));
}

EigenSystem spectral_decompose(const Hamiltonian& hamiltonian) {
  // Builders and transforms produce exactly symmetric matrices; anything
  // beyond rounding noise is a caller error.
  const double scale = std::max(1.0, hamiltonian.max_abs_entry());
  if (hamiltonian.asymmetry() > 1e-14 * scale) {
    throw ValidationError("spectral_decompose requires a symmetric matrix (asymmetry " +
                          std::to_string(hamiltonian.asymmetry()) + ")");
  }
  if (hamiltonian.dimension() == 0) return {};

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian.matrix());
  if (solver.info() != Eigen::Success) {
    throw NumericalError("symmetric eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace spinbeam
