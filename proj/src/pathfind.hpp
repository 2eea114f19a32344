// Copyright 2026 The mlg-design Authors
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
//
// Deterministic shortest paths under the composite order
// (total weight, hop count, lexicographic node-id sequence). The order is
// additive and prefix-compatible (equal hop counts imply equal sequence
// lengths), so label-setting search is exact for it.

#ifndef MLGD_SRC_PATHFIND_HPP_
#define MLGD_SRC_PATHFIND_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mlgd/types.hpp"

namespace mlgd::detail {

struct AdjEdge {
  std::string to;
  std::string edge_id;
  Money weight = 0;
};

// Neighbor lists; kept sorted by (to, edge_id) by add_undirected_edge.
using Adjacency = std::map<std::string, std::vector<AdjEdge>>;

void add_undirected_edge(Adjacency& adj, const std::string& a,
                         const std::string& b, const std::string& edge_id,
                         Money weight);

struct FoundPath {
  std::vector<std::string> nodes;
  std::vector<std::string> edges;
  Money cost = 0;

  int hops() const { return static_cast<int>(edges.size()); }
  bool operator==(const FoundPath&) const = default;
};

// true when x precedes y under (cost, hops, node sequence).
bool path_less(const FoundPath& x, const FoundPath& y);

// Minimum-composite simple path s -> t avoiding the banned elements.
std::optional<FoundPath> shortest_path(const Adjacency& adj, const std::string& s,
                                       const std::string& t,
                                       const std::set<std::string>& banned_nodes = {},
                                       const std::set<std::string>& banned_edges = {});

// Yen's algorithm: up to k loopless paths in composite order.
std::vector<FoundPath> k_shortest_paths(const Adjacency& adj, const std::string& s,
                                        const std::string& t, int k);

// Hop distances from s over the adjacency (ignoring weights); nodes not
// reachable are absent.
std::map<std::string, int> hop_distances(const Adjacency& adj, const std::string& s);

}  // namespace mlgd::detail

#endif  // MLGD_SRC_PATHFIND_HPP_
