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

#include "spinbeam/collective.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spinbeam/error.hpp"

namespace spinbeam {
namespace {

constexpr double kHomogeneityTolerance = 1e-12;

void require_positive(const char* name, int value) {
  if (value < 1) {
    throw ValidationError(std::string(name) + " must be a positive integer, got " +
                          std::to_string(value));
  }
}

// Coefficient vectors over the m output legs for the m - 1 complementary
// chains. Together with the uniform vector they form an orthonormal basis
// of R^m: cosine/sine pairs of each Fourier frequency q < m/2, plus the
// alternating mode when m is even.
std::vector<std::vector<double>> complementary_modes(int m) {
  std::vector<std::vector<double>> modes;
  const double pair_scale = std::sqrt(2.0 / m);
  for (int q = 1; 2 * q < m; ++q) {
    std::vector<double> c(static_cast<std::size_t>(m));
    std::vector<double> s(static_cast<std::size_t>(m));
    for (int p = 1; p <= m; ++p) {
      const double angle = 2.0 * std::numbers::pi * p * q / m;
      c[static_cast<std::size_t>(p - 1)] = pair_scale * std::cos(angle);
      s[static_cast<std::size_t>(p - 1)] = pair_scale * std::sin(angle);
    }
    modes.push_back(std::move(c));
    modes.push_back(std::move(s));
  }
  if (m % 2 == 0) {
    std::vector<double> alt(static_cast<std::size_t>(m));
    for (int p = 1; p <= m; ++p) {
      alt[static_cast<std::size_t>(p - 1)] = (p % 2 == 1 ? 1.0 : -1.0) / std::sqrt(m);
    }
    modes.push_back(std::move(alt));
  }
  return modes;
}

}  // namespace

CollectiveBasis::CollectiveBasis(Eigen::MatrixXd rows, std::vector<BasisBlock> blocks)
    : rows_(std::move(rows)), blocks_(std::move(blocks)) {
  if (rows_.rows() != rows_.cols()) throw ValidationError("collective basis must be square");
  std::size_t covered = 0;
  for (const auto& block : blocks_) {
    if (block.offset != covered) {
      throw ValidationError("collective basis blocks must tile the index range");
    }
    covered += block.length;
  }
  if (covered != dimension()) {
    throw ValidationError("collective basis blocks do not cover the dimension");
  }
}

std::size_t CollectiveBasis::block_of(std::size_t index) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (index < blocks_[b].offset + blocks_[b].length) return b;
  }
  throw OutOfRangeError("index " + std::to_string(index) + " outside collective basis");
}

double CollectiveBasis::orthogonality_defect() const {
  if (rows_.size() == 0) return 0.0;
  const Eigen::MatrixXd gram = rows_ * rows_.transpose();
  return (gram - Eigen::MatrixXd::Identity(rows_.rows(), rows_.cols())).cwiseAbs().maxCoeff();
}

CollectiveBasis star_collective_basis(int m, int M, int N) {
  require_positive("m", m);
  require_positive("M", M);
  require_positive("N", N);

  const Eigen::Index n = M + static_cast<Eigen::Index>(m) * N;
  Eigen::MatrixXd u = Eigen::MatrixXd::Zero(n, n);
  auto output_site = [&](int p, int j) -> Eigen::Index {
    return M + static_cast<Eigen::Index>(p - 1) * N + (j - 1);
  };

  for (Eigen::Index j = 0; j < M; ++j) u(j, j) = 1.0;
  const double uniform = 1.0 / std::sqrt(m);
  for (int j = 1; j <= N; ++j) {
    for (int p = 1; p <= m; ++p) u(M + j - 1, output_site(p, j)) = uniform;
  }

  std::vector<BasisBlock> blocks{{"a", 0, static_cast<std::size_t>(M + N)}};
  const auto modes = complementary_modes(m);
  for (std::size_t q = 0; q < modes.size(); ++q) {
    const Eigen::Index row0 = M + N + static_cast<Eigen::Index>(q) * N;
    for (int j = 1; j <= N; ++j) {
      for (int p = 1; p <= m; ++p) {
        u(row0 + j - 1, output_site(p, j)) = modes[q][static_cast<std::size_t>(p - 1)];
      }
    }
    blocks.push_back({"b" + std::to_string(q + 1), static_cast<std::size_t>(row0),
                      static_cast<std::size_t>(N)});
  }
  return CollectiveBasis(std::move(u), std::move(blocks));
}

double mixing_angle(double j_nb, double j_nc) {
  if (!std::isfinite(j_nb) || !std::isfinite(j_nc) || j_nb < 0.0 || j_nc < 0.0) {
    throw ValidationError("mixing angle needs finite node couplings >= 0");
  }
  if (j_nb == 0.0 && j_nc == 0.0) {
    throw ValidationError("mixing angle undefined when both node couplings are zero");
  }
  return std::atan2(j_nc, j_nb);
}

CollectiveBasis ybeam_collective_basis(double theta, int M, int N) {
  require_positive("M", M);
  require_positive("N", N);
  if (!std::isfinite(theta)) throw ValidationError("mixing angle must be finite");

  const Eigen::Index n = M + 2 * static_cast<Eigen::Index>(N);
  Eigen::MatrixXd u = Eigen::MatrixXd::Zero(n, n);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  for (Eigen::Index j = 0; j < M; ++j) u(j, j) = 1.0;
  for (Eigen::Index j = 0; j < N; ++j) {
    const Eigen::Index b_site = M + j;
    const Eigen::Index c_site = M + N + j;
    u(M + j, b_site) = c;
    u(M + j, c_site) = s;
    u(M + N + j, b_site) = s;
    u(M + N + j, c_site) = -c;
  }
  return CollectiveBasis(std::move(u),
                         {{"a", 0, static_cast<std::size_t>(M + N)},
                          {"b", static_cast<std::size_t>(M + N), static_cast<std::size_t>(N)}});
}

Hamiltonian transform_hamiltonian(const Hamiltonian& hamiltonian,
                                  const CollectiveBasis& basis) {
  if (hamiltonian.dimension() != basis.dimension()) {
    throw ValidationError("basis dimension " + std::to_string(basis.dimension()) +
                          " does not match Hamiltonian dimension " +
                          std::to_string(hamiltonian.dimension()));
  }
  const Eigen::MatrixXd& u = basis.matrix();
  Eigen::MatrixXd h = u * hamiltonian.matrix() * u.transpose();
  Eigen::MatrixXd symmetric = 0.5 * (h + h.transpose());
  return Hamiltonian(std::move(symmetric));
}

double offblock_norm(const Hamiltonian& transformed, const CollectiveBasis& basis) {
  if (transformed.dimension() != basis.dimension()) {
    throw ValidationError("basis dimension does not match Hamiltonian dimension");
  }
  double worst = 0.0;
  for (const auto& block : basis.blocks()) {
    const std::size_t end = block.offset + block.length;
    for (std::size_t i = block.offset; i < end; ++i) {
      for (std::size_t k = end; k < transformed.dimension(); ++k) {
        worst = std::max(worst, std::abs(transformed(i, k)));
      }
    }
  }
  return worst;
}

DecouplingReport decoupling_report(const SpinNetwork& network) {
  const auto unsupported = [](const std::string& why) {
    return ValidationError("decoupling_report: unsupported topology (" + why + ")");
  };
  if (network.nodes().size() != 1) throw unsupported("exactly one node required");
  const auto& legs = network.legs();
  const auto& node = network.nodes().front();
  if (legs.empty() || node.anchor.leg != legs.front().id ||
      node.anchor.position != legs.front().length) {
    throw unsupported("node must anchor at the last site of the first leg");
  }
  const int m = static_cast<int>(node.bonds.size());
  if (m < 1 || legs.size() != static_cast<std::size_t>(m) + 1) {
    throw unsupported("every non-input leg must be an output of the node");
  }
  const int N = legs[1].length;
  for (int p = 0; p < m; ++p) {
    const auto& bond = node.bonds[static_cast<std::size_t>(p)];
    const auto& leg = legs[static_cast<std::size_t>(p) + 1];
    if (bond.leg != leg.id || bond.end != LegEnd::first) {
      throw unsupported("output legs must follow in bond order, joined at their first site");
    }
    if (leg.length != N) throw unsupported("output legs must have equal lengths");
  }

  const Hamiltonian h = single_excitation_hamiltonian(network);
  const int M = legs.front().length;
  const double j_a = legs.front().coupling;

  DecouplingReport report;
  report.outputs = m;
  CollectiveBasis basis = [&] {
    if (m == 2) {
      const double j_b = legs[1].coupling;
      const double j_c = legs[2].coupling;
      const double j_nb = node.bonds[0].coupling;
      const double j_nc = node.bonds[1].coupling;
      const double theta = mixing_angle(j_nb, j_nc);
      report.theta = theta;
      report.g = (j_b - j_c) * std::sin(2.0 * theta) / 2.0;
      report.j_ab = j_nb * std::sin(theta) - j_nc * std::cos(theta);
      report.j_am = j_nb * std::cos(theta) + j_nc * std::sin(theta);
      return ybeam_collective_basis(theta, M, N);
    }
    const double j_out = legs[1].coupling;
    const double j_node = node.bonds[0].coupling;
    for (int p = 0; p < m; ++p) {
      if (legs[static_cast<std::size_t>(p) + 1].coupling != j_out ||
          node.bonds[static_cast<std::size_t>(p)].coupling != j_node) {
        throw unsupported("stars with m != 2 need identical output legs and node bonds");
      }
    }
    report.j_am = std::sqrt(static_cast<double>(m)) * j_node;
    return star_collective_basis(m, M, N);
  }();
  report.h_vn_coeff = j_a - report.j_am;

  const Hamiltonian transformed = transform_hamiltonian(h, basis);
  report.offblock_norm = offblock_norm(transformed, basis);
  report.chain_a_node_bond =
      transformed(static_cast<std::size_t>(M - 1), static_cast<std::size_t>(M));

  double lo = report.chain_a_node_bond;
  double hi = lo;
  for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(M + N); ++k) {
    lo = std::min(lo, transformed(k, k + 1));
    hi = std::max(hi, transformed(k, k + 1));
  }
  report.chain_a_homogeneous = hi - lo <= kHomogeneityTolerance;
  return report;
}

}  // namespace spinbeam
