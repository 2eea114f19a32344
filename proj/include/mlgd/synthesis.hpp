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
// Builds the initial redundant multilayer graph from an instance:
// layer 0 mirrors the transport topology, layer 1 holds one vertex per
// LSR candidate plus candidate logical edges (each carrying up to k
// candidate transport paths), and one layer per demand holds its
// endpoints joined by the logical adjacencies projected from layer 1.

#ifndef MLGD_SYNTHESIS_HPP_
#define MLGD_SYNTHESIS_HPP_

#include <string>
#include <vector>

#include "mlgd/instance.hpp"
#include "mlgd/mlg.hpp"
#include "mlgd/types.hpp"

namespace mlgd {

// Generated element id scheme. Instance ids are restricted to
// [A-Za-z0-9_.-]+ so the prefixes below cannot collide.
std::string lsr_vertex_id(const std::string& node);
std::string flow_vertex_id(const std::string& demand, const std::string& node);
std::string transport_edge_id(const std::string& a, const std::string& b);
std::string logical_edge_id(const std::string& node_a, const std::string& node_b);
std::string flow_edge_id(const std::string& demand, const std::string& node_a,
                         const std::string& node_b);
std::string lsr_mapping_edge_id(const std::string& node);
std::string flow_mapping_edge_id(const std::string& demand, const std::string& node);

// Inverse of lsr_vertex_id; throws StructuralError on other ids.
std::string node_of_lsr_vertex(const std::string& lsr_vertex);

// Deterministic: identical instances yield identical graphs, element ids
// included. Throws InputError when the instance invariants fail.
MultiLayerGraph synthesize(const Instance& instance);

// Up to k loop-free paths between two transport nodes, ordered by
// (total fixed cost, hop count, lexicographic node ids). Edge weights of
// the view are taken as the fixed costs. Returns an empty list when no
// path exists; throws InputError when s == t or either endpoint is
// missing from the view.
std::vector<TransportPath> candidate_paths(const LayerView& transport,
                                           const std::string& s,
                                           const std::string& t, int k);

}  // namespace mlgd

#endif  // MLGD_SYNTHESIS_HPP_
