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
// Multicast routing over the logical layer and the projection of logical
// usage down to transport-link bandwidth. All operations are pure
// functions over immutable inputs; LoadMaps merge additively.

#ifndef MLGD_ROUTING_HPP_
#define MLGD_ROUTING_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mlgd/instance.hpp"
#include "mlgd/mlg.hpp"
#include "mlgd/types.hpp"

namespace mlgd {

// One demand's routing: a tree of logical edges spanning its endpoints'
// LSR vertices plus, per tree edge, the chosen candidate transport path.
struct MulticastRoute {
  std::string demand_id;
  std::set<std::string> logical_tree;      // logical edge ids
  std::map<std::string, int> path_choice;  // defined for exactly the tree edges
  bool operator==(const MulticastRoute&) const = default;
};

struct LoadMap {
  std::map<std::string, Bandwidth> transport_link;  // edge id -> consumed units
  std::map<std::string, Bandwidth> logical_edge;    // edge id -> consumed units
  std::map<std::string, Bandwidth> lsr_throughput;  // layer-1 vertex id -> switched units

  LoadMap& operator+=(const LoadMap& other);
  bool operator==(const LoadMap&) const = default;
};

// A small weighted graph for the Steiner heuristic, typically the logical
// layer restricted to a selection, with caller-supplied edge lengths.
struct ViewEdge {
  std::string id;
  std::string a;
  std::string b;
  Money length = 0;
};

struct RoutingView {
  std::set<std::string> vertices;
  std::vector<ViewEdge> edges;  // endpoints must be in `vertices`
};

struct SteinerResult {
  std::set<std::string> tree;  // edge ids; empty for a single terminal
  std::optional<std::string> unreachable;  // terminal that cannot be connected
  bool ok() const { return !unreachable.has_value(); }
};

// Takahashi–Matsuyama: grow the tree from the lexicographically smallest
// terminal, repeatedly attaching the nearest remaining terminal by
// shortest path. Deterministic; cost at most 2x the Steiner optimum.
// Throws InputError on an empty terminal set or a terminal missing from
// the view.
SteinerResult steiner_tree(const RoutingView& view,
                           const std::set<std::string>& terminals);

// Projects a route downward: demand bandwidth on every transport link of
// each tree edge's chosen path, bandwidth per tree edge on the logical
// edge itself, and tree-degree x bandwidth switched at each LSR vertex.
// Throws on unknown edges or invalid path indices.
LoadMap map_down(const MultiLayerGraph& mlg, const MulticastRoute& route,
                 const Demand& demand);

struct CapacityViolation {
  std::string element;
  std::string message;
  bool operator==(const CapacityViolation&) const = default;
};

struct CapacityReport {
  std::vector<CapacityViolation> violations;  // sorted by (element, message)
  bool feasible() const { return violations.empty(); }
};

// Flags every transport link whose load exceeds its dimensioned capacity
// or whose module count exceeds max_modules, and every LSR whose switched
// throughput exceeds its limit.
CapacityReport check_capacity(const Instance& instance, const LoadMap& load,
                              const std::map<std::string, int>& module_counts);

// Minimal dimensioning: ceil(load / module_size) per loaded link.
std::map<std::string, int> dimension_loads(const Instance& instance,
                                           const LoadMap& load);

}  // namespace mlgd

#endif  // MLGD_ROUTING_HPP_
