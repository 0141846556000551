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

#ifndef SPINBEAM_NETWORK_HPP
#define SPINBEAM_NETWORK_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spinbeam {

// A homogeneous open chain. Sites are numbered 1..length along the leg.
struct LegSpec {
  std::string id;
  int length = 0;
  double coupling = 0.0;
};

enum class LegEnd { first, last };

// One node bond: the node's anchor site couples to an end site of `leg`.
struct NodeBond {
  std::string leg;
  LegEnd end = LegEnd::first;
  double coupling = 0.0;
};

struct SiteRef {
  std::string leg;
  int position = 0;  // 1-based
};

// A node is not a site. It is the set of bonds from the anchor site to the
// end sites of other legs.
struct NodeSpec {
  std::string id;
  SiteRef anchor;
  std::vector<NodeBond> bonds;
};

struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;
  double weight = 0.0;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool connected = false;

  bool ok() const noexcept { return violations.empty(); }
};

// Leg/node topology with a canonical global site indexing: legs occupy
// consecutive index ranges in declaration order, sites of one leg in
// position order. Immutable after construction.
//
// The constructor only lays out the index map. Structural checks live in
// validate(), so malformed networks can be inspected rather than rejected.
class SpinNetwork {
 public:
  SpinNetwork(std::vector<LegSpec> legs, std::vector<NodeSpec> nodes);

  const std::vector<LegSpec>& legs() const noexcept { return legs_; }
  const std::vector<NodeSpec>& nodes() const noexcept { return nodes_; }
  std::size_t site_count() const noexcept { return site_count_; }

  bool has_leg(std::string_view id) const noexcept;
  const LegSpec& leg(std::string_view id) const;
  std::size_t leg_offset(std::string_view id) const;

  // Global index of site `position` (1-based) on leg `id`.
  std::size_t site_index(std::string_view id, int position) const;
  std::size_t site_index(const SiteRef& ref) const {
    return site_index(ref.leg, ref.position);
  }
  // Global indices of every site on a leg, in position order.
  std::vector<std::size_t> leg_sites(std::string_view id) const;
  // Inverse of site_index.
  SiteRef locate(std::size_t index) const;

  // Intra-leg nearest-neighbour bonds followed by node bonds, including
  // zero-weight ones. Entries referencing missing legs or sites are skipped.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  ValidationReport validate() const;

 private:
  std::size_t leg_position(std::string_view id) const;
  std::size_t end_index(const NodeBond& bond) const;

  std::vector<LegSpec> legs_;
  std::vector<NodeSpec> nodes_;
  std::vector<std::size_t> offsets_;
  std::size_t site_count_ = 0;
  std::vector<Edge> edges_;
};

inline ValidationReport validate(const SpinNetwork& network) {
  return network.validate();
}

// Input leg "A" (length M) joined at its last site to the first site of m
// identical output legs "B1".."Bm" (length N), all with node coupling j_node.
SpinNetwork build_star(int m, int M, int N, double J, double j_node);

// Legs "A", "B", "C"; one node joining (A, M) to (B, 1) and (C, 1).
SpinNetwork build_ybeam(int M, int n_b, int n_c, double j_a, double j_b,
                        double j_c, double j_nb, double j_nc);

// Two Y-beams back to back. Legs "A", "B", "C" (length n_b + delta), "D".
// Node "in" joins (A, n_a) to the heads of B and C; node "out" joins (D, 1)
// to the tails of B and C.
SpinNetwork build_interferometer(int n_a, int n_b, int delta, int n_d,
                                 double J, double j_node);

}  // namespace spinbeam

#endif  // SPINBEAM_NETWORK_HPP
