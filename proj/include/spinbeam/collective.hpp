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

#ifndef SPINBEAM_COLLECTIVE_HPP
#define SPINBEAM_COLLECTIVE_HPP

// Collective-mode ("virtual chain") bases for star networks and Y-beams.
//
// A star with input leg A (M sites) and m output legs of N sites is
// rewritten as one chain a = A followed by a symmetric combination of the
// output legs at equal depth, plus m - 1 complementary chains built from the
// remaining orthogonal combinations. When the node couplings match the leg
// couplings, the transformed Hamiltonian is block diagonal and chain a is a
// homogeneous chain of M + N sites. In that case a packet on A crosses the
// node without reflection.

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spinbeam/hamiltonian.hpp"
#include "spinbeam/network.hpp"

namespace spinbeam {

struct BasisBlock {
  std::string label;  // "a", "b" or "b1".."b{m-1}"
  std::size_t offset = 0;
  std::size_t length = 0;
};

// Real orthogonal change of basis. Row r of matrix() is the r-th virtual
// site expressed in the original site basis, so H' = U H U^T. New indices
// are grouped into consecutive blocks, chain a first.
class CollectiveBasis {
 public:
  CollectiveBasis(Eigen::MatrixXd rows, std::vector<BasisBlock> blocks);

  const Eigen::MatrixXd& matrix() const noexcept { return rows_; }
  const std::vector<BasisBlock>& blocks() const noexcept { return blocks_; }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(rows_.rows()); }
  std::size_t block_of(std::size_t index) const;

  // max |U U^T - I|
  double orthogonality_defect() const;

 private:
  Eigen::MatrixXd rows_;
  std::vector<BasisBlock> blocks_;
};

// Basis for build_star(m, M, N, ...) site layout. Complementary chains use a
// real sine/cosine form of the discrete Fourier modes that spans the same
// subspace.
CollectiveBasis star_collective_basis(int m, int M, int N);

// theta = atan2(j_nc, j_nb) in [0, pi/2]. Rejects both couplings zero.
double mixing_angle(double j_nb, double j_nc);

// Basis for build_ybeam(M, N, N, ...) layout:
//   a_{M+j} = cos(theta) B_j + sin(theta) C_j
//   b_j     = sin(theta) B_j - cos(theta) C_j
CollectiveBasis ybeam_collective_basis(double theta, int M, int N);

// H' = U H U^T, symmetrized to remove rounding asymmetry.
Hamiltonian transform_hamiltonian(const Hamiltonian& hamiltonian,
                                  const CollectiveBasis& basis);

// Largest |H'(i, k)| with i and k in different blocks.
double offblock_norm(const Hamiltonian& transformed, const CollectiveBasis& basis);

struct DecouplingReport {
  int outputs = 0;               // m
  std::optional<double> theta;   // Y-beams only
  double g = 0.0;                // (J_B - J_C) sin(2 theta) / 2
  double j_ab = 0.0;             // J_nB sin(theta) - J_nC cos(theta)
  double j_am = 0.0;             // virtual node bond, closed form
  double h_vn_coeff = 0.0;       // J_A - J_aM, the node impurity on chain a
  double offblock_norm = 0.0;    // measured from H'
  double chain_a_node_bond = 0.0;  // measured H'(a_M, a_{M+1})
  bool chain_a_homogeneous = false;
};

// Accepts single-node networks whose anchor is the last site of the first
// declared leg and whose output legs follow in bond order, all starting at
// the node with equal lengths. For m != 2 the output legs must share one
// coupling and one node coupling. Throws ValidationError otherwise.
DecouplingReport decoupling_report(const SpinNetwork& network);

}  // namespace spinbeam

#endif  // SPINBEAM_COLLECTIVE_HPP
