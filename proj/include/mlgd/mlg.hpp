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
// The multilayer graph model: an ordered stack of layers (0 = transport,
// 1 = MPLS/logical, 2.. = one layer per multicast flow) with intra-layer
// edges carrying weights/capacities and inter-layer edges carrying the
// "is realized by" relation between a vertex and its counterpart one
// hierarchy level down.

#ifndef MLGD_MLG_HPP_
#define MLGD_MLG_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mlgd/types.hpp"

namespace mlgd {

enum class VertexKind { kTransportNode, kLsrCandidate, kFlowEndpoint };
enum class EdgeKind { kIntraLayer, kInterLayer };

struct Vertex {
  std::string id;  // unique across the whole graph
  LayerId layer = 0;
  VertexKind kind = VertexKind::kTransportNode;
  Money node_cost = 0;  // LSR install cost; 0 for pure transport nodes
  std::optional<Bandwidth> throughput_limit;  // nullopt = unbounded
};

struct Edge {
  std::string id;
  std::string a;
  std::string b;
  EdgeKind kind = EdgeKind::kIntraLayer;
  Money weight = 0;                    // inter-layer edges stay at 0
  std::optional<Bandwidth> capacity;   // intra-layer only; nullopt = unbounded
  // Candidate transport realizations; non-empty only on logical edges.
  std::vector<TransportPath> candidate_paths;
};

// Layers adjacent in the hierarchy: transport below logical, and every
// flow layer directly above logical.
bool layers_adjacent(LayerId x, LayerId y);

// Immutable after MlgBuilder::build(); any number of concurrent readers
// is safe.
class MultiLayerGraph {
 public:
  int layer_count() const { return layer_count_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  const Vertex* find_vertex(const std::string& id) const;
  const Edge* find_edge(const std::string& id) const;
  // Throwing lookups for callers that require the element to exist.
  const Vertex& vertex(const std::string& id) const;
  const Edge& edge(const std::string& id) const;

  // Indices into edges() of all edges incident to the vertex.
  const std::vector<std::size_t>& incident_edges(const std::string& vertex_id) const;

  // Endpoint opposite `vertex_id` on edge `e`.
  const Vertex& other_endpoint(const Edge& e, const std::string& vertex_id) const;

  // Stable textual listing, byte-identical for identical graphs.
  std::string dump() const;

 private:
  friend class MlgBuilder;
  int layer_count_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, std::size_t> vertex_by_id_;
  std::map<std::string, std::size_t> edge_by_id_;
  std::vector<std::vector<std::size_t>> incident_;
};

// Mutation is confined to the builder; build() freezes the value.
// The builder only enforces what later code cannot represent (unique ids,
// endpoints that exist); semantic invariants are validate()'s job so that
// invalid graphs can be constructed and diagnosed.
class MlgBuilder {
 public:
  LayerId add_layer();
  MlgBuilder& add_vertex(Vertex v);
  MlgBuilder& add_edge(Edge e);
  MultiLayerGraph build();

 private:
  MultiLayerGraph g_;
};

struct Selection {
  std::set<std::string> vertices;
  std::set<std::string> edges;
  bool operator==(const Selection&) const = default;
};

struct Violation {
  std::string element;  // offending element id ("layer:0" for layer problems)
  std::string message;
  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;  // sorted by (element, message)
  bool valid() const { return violations.empty(); }
};

// Reports every violated model invariant; violations are data, not errors.
ValidationReport validate(const MultiLayerGraph& mlg);

// Unknown ids and incidence-closure violations of a Selection, sorted.
std::vector<Violation> validate_selection(const MultiLayerGraph& mlg,
                                          const Selection& sel);

// One layer as a simple weighted graph: its vertices plus intra-layer
// edges only, both sorted by id.
struct LayerView {
  LayerId layer = 0;
  std::vector<const Vertex*> vertices;
  std::vector<const Edge*> edges;
};

// Throws InputError("no such layer") for unknown layers.
LayerView layer_subgraph(const MultiLayerGraph& mlg, LayerId layer);

// Sum of chosen vertex node costs plus chosen edge weights.
// Throws StructuralError when the selection references unknown ids.
Money total_weight(const MultiLayerGraph& mlg, const Selection& sel);

// The unique vertex one hierarchy level below `vertex_id` (layer 1 maps to
// layer 0, flow layers map to layer 1). Throws InputError on layer-0
// vertices and StructuralError when the downward edge is missing or
// ambiguous.
const Vertex& descend(const MultiLayerGraph& mlg, const std::string& vertex_id);

}  // namespace mlgd

#endif  // MLGD_MLG_HPP_
