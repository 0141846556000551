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

#ifndef SPINBEAM_HAMILTONIAN_HPP
#define SPINBEAM_HAMILTONIAN_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <iosfwd>

#include "spinbeam/network.hpp"

namespace spinbeam {

// Real symmetric hopping matrix of the single-excitation sector, indexed by
// global site id. Entry (i, j) is the coupling of the bond between sites i
// and j. All builder outputs carry positive bond weights.
class Hamiltonian {
 public:
  explicit Hamiltonian(Eigen::MatrixXd matrix);

  std::size_t dimension() const noexcept {
    return static_cast<std::size_t>(matrix_.rows());
  }
  const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }
  double operator()(std::size_t i, std::size_t j) const {
    return matrix_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  double max_abs_entry() const;
  // max |H(i,j) - H(j,i)|
  double asymmetry() const;
  std::size_t bond_count() const;  // nonzero entries above the diagonal

  // Writes "row,col,value" lines for every nonzero entry.
  void write_triplets_csv(std::ostream& out) const;

 private:
  Eigen::MatrixXd matrix_;
};

// Throws ValidationError if the network fails validate().
Hamiltonian single_excitation_hamiltonian(const SpinNetwork& network);

struct EigenSystem {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // orthonormal columns
};

// Full dense diagonalization. Rejects non-symmetric input.
EigenSystem spectral_decompose(const Hamiltonian& hamiltonian);

}  // namespace spinbeam

#endif  // SPINBEAM_HAMILTONIAN_HPP
