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

#include "spinbeam/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <set>

#include "spinbeam/error.hpp"

namespace spinbeam {
namespace {

constexpr std::size_t kNoLeg = std::numeric_limits<std::size_t>::max();

std::string quoted(std::string_view s) {
  return "'" + std::string(s) + "'";
}

void require_length(const char* name, int value) {
  if (value < 1) {
    throw ValidationError(std::string(name) + " must be a positive integer, got " +
                          std::to_string(value));
  }
}

void require_coupling(const char* name, double value) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw ValidationError(std::string(name) + " must be a finite coupling > 0, got " +
                          std::to_string(value));
  }
}

void require_node_coupling(const char* name, double value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw ValidationError(std::string(name) + " must be a finite coupling >= 0, got " +
                          std::to_string(value));
  }
}

SpinNetwork checked(SpinNetwork network) {
  auto report = network.validate();
  if (!report.ok()) {
    throw ValidationError("invalid network: " + report.violations.front());
  }
  return network;
}

}  // namespace

SpinNetwork::SpinNetwork(std::vector<LegSpec> legs, std::vector<NodeSpec> nodes)
    : legs_(std::move(legs)), nodes_(std::move(nodes)) {
  offsets_.reserve(legs_.size());
  for (const auto& leg : legs_) {
    offsets_.push_back(site_count_);
    site_count_ += static_cast<std::size_t>(std::max(leg.length, 0));
  }

  for (std::size_t l = 0; l < legs_.size(); ++l) {
    for (int j = 1; j < legs_[l].length; ++j) {
      const std::size_t a = offsets_[l] + static_cast<std::size_t>(j - 1);
      edges_.push_back({a, a + 1, legs_[l].coupling});
    }
  }
  for (const auto& node : nodes_) {
    const std::size_t anchor_leg = leg_position(node.anchor.leg);
    if (anchor_leg == kNoLeg || node.anchor.position < 1 ||
        node.anchor.position > legs_[anchor_leg].length) {
      continue;
    }
    const std::size_t anchor =
        offsets_[anchor_leg] + static_cast<std::size_t>(node.anchor.position - 1);
    for (const auto& bond : node.bonds) {
      const std::size_t l = leg_position(bond.leg);
      if (l == kNoLeg || legs_[l].length < 1) continue;
      edges_.push_back({anchor, end_index(bond), bond.coupling});
    }
  }
}

std::size_t SpinNetwork::leg_position(std::string_view id) const {
  for (std::size_t l = 0; l < legs_.size(); ++l) {
    if (legs_[l].id == id) return l;
  }
  return kNoLeg;
}

std::size_t SpinNetwork::end_index(const NodeBond& bond) const {
  const std::size_t l = leg_position(bond.leg);
  const int position = bond.end == LegEnd::first ? 1 : legs_[l].length;
  return offsets_[l] + static_cast<std::size_t>(position - 1);
}

bool SpinNetwork::has_leg(std::string_view id) const noexcept {
  return leg_position(id) != kNoLeg;
}

const LegSpec& SpinNetwork::leg(std::string_view id) const {
  const std::size_t l = leg_position(id);
  if (l == kNoLeg) throw ValidationError("unknown leg " + quoted(id));
  return legs_[l];
}

std::size_t SpinNetwork::leg_offset(std::string_view id) const {
  const std::size_t l = leg_position(id);
  if (l == kNoLeg) throw ValidationError("unknown leg " + quoted(id));
  return offsets_[l];
}

std::size_t SpinNetwork::site_index(std::string_view id, int position) const {
  const std::size_t l = leg_position(id);
  if (l == kNoLeg) throw ValidationError("unknown leg " + quoted(id));
  if (position < 1 || position > legs_[l].length) {
    throw OutOfRangeError("site " + std::to_string(position) + " outside leg " +
                          quoted(id) + " of length " +
                          std::to_string(legs_[l].length));
  }
  return offsets_[l] + static_cast<std::size_t>(position - 1);
}

std::vector<std::size_t> SpinNetwork::leg_sites(std::string_view id) const {
  const auto& spec = leg(id);
  const std::size_t offset = leg_offset(id);
  std::vector<std::size_t> sites(static_cast<std::size_t>(std::max(spec.length, 0)));
  for (std::size_t j = 0; j < sites.size(); ++j) sites[j] = offset + j;
  return sites;
}

SiteRef SpinNetwork::locate(std::size_t index) const {
  if (index >= site_count_) {
    throw OutOfRangeError("site id " + std::to_string(index) +
                          " outside basis of size " + std::to_string(site_count_));
  }
  // offsets_ is non-decreasing; the owning leg is the last one starting at or
  // before `index` with at least one site.
  for (std::size_t l = legs_.size(); l-- > 0;) {
    if (offsets_[l] <= index && legs_[l].length > 0) {
      return {legs_[l].id, static_cast<int>(index - offsets_[l]) + 1};
    }
  }
  throw OutOfRangeError("site id " + std::to_string(index) + " not owned by any leg");
}

ValidationReport SpinNetwork::validate() const {
  ValidationReport report;
  auto& v = report.violations;

  std::set<std::string> seen;
  for (const auto& leg : legs_) {
    if (!seen.insert(leg.id).second) v.push_back("duplicate leg id " + quoted(leg.id));
    if (leg.length < 1) {
      v.push_back("leg " + quoted(leg.id) + ": leg length must be >= 1");
    }
    if (!std::isfinite(leg.coupling) || leg.coupling <= 0.0) {
      v.push_back("leg " + quoted(leg.id) + ": coupling must be > 0");
    }
  }

  // (leg, end) -> owning node
  std::map<std::pair<std::string, LegEnd>, std::string> ends;
  auto claim = [&](const std::string& leg, LegEnd end, const std::string& node) {
    auto [it, inserted] = ends.emplace(std::make_pair(leg, end), node);
    if (!inserted) {
      v.push_back("leg " + quoted(leg) + (end == LegEnd::first ? " first" : " last") +
                  " end joins both node " + quoted(it->second) + " and node " +
                  quoted(node));
    }
  };

  for (const auto& node : nodes_) {
    const std::size_t anchor_leg = leg_position(node.anchor.leg);
    if (anchor_leg == kNoLeg) {
      v.push_back("node " + quoted(node.id) + ": anchor references unknown leg " +
                  quoted(node.anchor.leg));
    } else {
      const int length = legs_[anchor_leg].length;
      if (node.anchor.position < 1 || node.anchor.position > length) {
        v.push_back("node " + quoted(node.id) + ": anchor site " +
                    std::to_string(node.anchor.position) + " outside leg " +
                    quoted(node.anchor.leg));
      } else if (node.anchor.position == length) {
        claim(node.anchor.leg, LegEnd::last, node.id);
      } else if (node.anchor.position == 1) {
        claim(node.anchor.leg, LegEnd::first, node.id);
      }
    }
    if (node.bonds.empty()) v.push_back("node " + quoted(node.id) + ": no bonds");
    for (const auto& bond : node.bonds) {
      if (!has_leg(bond.leg)) {
        v.push_back("node " + quoted(node.id) + ": bond references unknown leg " +
                    quoted(bond.leg));
        continue;
      }
      if (bond.leg == node.anchor.leg) {
        v.push_back("node " + quoted(node.id) + ": bond back onto anchor leg " +
                    quoted(bond.leg));
      }
      if (!std::isfinite(bond.coupling) || bond.coupling < 0.0) {
        v.push_back("node " + quoted(node.id) + ": node coupling to leg " +
                    quoted(bond.leg) + " must be >= 0");
      }
      claim(bond.leg, bond.end, node.id);
    }
  }

  if (site_count_ > 0) {
    std::vector<std::vector<std::size_t>> adjacency(site_count_);
    for (const auto& e : edges_) {
      if (e.weight == 0.0) continue;
      adjacency[e.a].push_back(e.b);
      adjacency[e.b].push_back(e.a);
    }
    std::vector<bool> visited(site_count_, false);
    std::queue<std::size_t> frontier;
    frontier.push(0);
    visited[0] = true;
    std::size_t reached = 1;
    while (!frontier.empty()) {
      const std::size_t i = frontier.front();
      frontier.pop();
      for (std::size_t k : adjacency[i]) {
        if (!visited[k]) {
          visited[k] = true;
          ++reached;
          frontier.push(k);
        }
      }
    }
    report.connected = reached == site_count_;
  }
  return report;
}

SpinNetwork build_star(int m, int M, int N, double J, double j_node) {
  require_length("m", m);
  require_length("M", M);
  require_length("N", N);
  require_coupling("J", J);
  require_node_coupling("J_n", j_node);

  std::vector<LegSpec> legs{{"A", M, J}};
  NodeSpec node{"O", {"A", M}, {}};
  for (int p = 1; p <= m; ++p) {
    const std::string id = "B" + std::to_string(p);
    legs.push_back({id, N, J});
    node.bonds.push_back({id, LegEnd::first, j_node});
  }
  return checked(SpinNetwork(std::move(legs), {std::move(node)}));
}

SpinNetwork build_ybeam(int M, int n_b, int n_c, double j_a, double j_b, double j_c,
                        double j_nb, double j_nc) {
  require_length("M", M);
  require_length("N_B", n_b);
  require_length("N_C", n_c);
  require_coupling("J_A", j_a);
  require_coupling("J_B", j_b);
  require_coupling("J_C", j_c);
  require_node_coupling("J_nB", j_nb);
  require_node_coupling("J_nC", j_nc);

  return checked(SpinNetwork(
      {{"A", M, j_a}, {"B", n_b, j_b}, {"C", n_c, j_c}},
      {{"O", {"A", M}, {{"B", LegEnd::first, j_nb}, {"C", LegEnd::first, j_nc}}}}));
}

SpinNetwork build_interferometer(int n_a, int n_b, int delta, int n_d, double J,
                                 double j_node) {
  require_length("N_A", n_a);
  require_length("N_B", n_b);
  require_length("N_D", n_d);
  if (delta <= -n_b) {
    throw ValidationError("delta must exceed -N_B so leg C keeps at least one site, got " +
                          std::to_string(delta));
  }
  require_coupling("J", J);
  require_node_coupling("J_node", j_node);

  const int n_c = n_b + delta;
  return checked(SpinNetwork(
      {{"A", n_a, J}, {"B", n_b, J}, {"C", n_c, J}, {"D", n_d, J}},
      {{"in", {"A", n_a}, {{"B", LegEnd::first, j_node}, {"C", LegEnd::first, j_node}}},
       {"out", {"D", 1}, {{"B", LegEnd::last, j_node}, {"C", LegEnd::last, j_node}}}}));
}

}  // namespace spinbeam
