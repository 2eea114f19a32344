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

#include "mlgd/synthesis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <utility>

#include "mlgd/log.hpp"
#include "pathfind.hpp"

namespace mlgd {

namespace {

std::pair<std::string, std::string> sorted_pair(const std::string& x,
                                                const std::string& y) {
  return x <= y ? std::make_pair(x, y) : std::make_pair(y, x);
}

detail::Adjacency transport_adjacency(const LayerView& transport) {
  detail::Adjacency adj;
  for (const Vertex* v : transport.vertices) adj.try_emplace(v->id);
  for (const Edge* e : transport.edges)
    detail::add_undirected_edge(adj, e->a, e->b, e->id, e->weight);
  return adj;
}

TransportPath to_transport_path(const detail::FoundPath& p) {
  return TransportPath{p.nodes, p.edges, p.cost};
}

}  // namespace

std::string lsr_vertex_id(const std::string& node) { return "lsr:" + node; }

std::string flow_vertex_id(const std::string& demand, const std::string& node) {
  return "flow:" + demand + ":" + node;
}

std::string transport_edge_id(const std::string& a, const std::string& b) {
  auto [lo, hi] = sorted_pair(a, b);
  return "t:" + lo + "-" + hi;
}

std::string logical_edge_id(const std::string& node_a, const std::string& node_b) {
  auto [lo, hi] = sorted_pair(node_a, node_b);
  return "l:" + lo + "-" + hi;
}

std::string flow_edge_id(const std::string& demand, const std::string& node_a,
                         const std::string& node_b) {
  auto [lo, hi] = sorted_pair(node_a, node_b);
  return "f:" + demand + ":" + lo + "-" + hi;
}

std::string lsr_mapping_edge_id(const std::string& node) { return "m:" + node; }

std::string flow_mapping_edge_id(const std::string& demand, const std::string& node) {
  return "m:" + demand + ":" + node;
}

std::string node_of_lsr_vertex(const std::string& lsr_vertex) {
  if (lsr_vertex.rfind("lsr:", 0) != 0)
    throw StructuralError("not an LSR vertex id: " + lsr_vertex);
  return lsr_vertex.substr(4);
}

std::vector<TransportPath> candidate_paths(const LayerView& transport,
                                           const std::string& s,
                                           const std::string& t, int k) {
  if (s == t) throw InputError("candidate_paths requires distinct endpoints");
  const auto adj = transport_adjacency(transport);
  if (!adj.count(s)) throw InputError("unknown transport node: " + s);
  if (!adj.count(t)) throw InputError("unknown transport node: " + t);
  if (k < 1) throw InputError("k_paths must be at least 1");

  std::vector<TransportPath> out;
  for (const auto& p : detail::k_shortest_paths(adj, s, t, k))
    out.push_back(to_transport_path(p));
  return out;
}

MultiLayerGraph synthesize(const Instance& instance) {
  const auto problems = check_instance(instance);
  if (!problems.empty()) throw InputError("invalid instance: " + problems.front());

  MlgBuilder builder;

  // Layer 0: the transport topology.
  builder.add_layer();
  for (const TransportNode& n : instance.nodes)
    builder.add_vertex(Vertex{n.id, 0, VertexKind::kTransportNode, 0, std::nullopt});
  for (const TransportLink& l : instance.links) {
    Edge e;
    e.id = l.id();
    e.a = l.a;
    e.b = l.b;
    e.kind = EdgeKind::kIntraLayer;
    e.weight = l.fixed_cost;
    e.capacity = l.max_capacity();
    builder.add_edge(std::move(e));
  }

  // Layer 1: one vertex per LSR candidate plus its mapping edge.
  builder.add_layer();
  std::vector<std::string> candidates;
  for (const TransportNode& n : instance.nodes)
    if (n.lsr_candidate) candidates.push_back(n.id);
  std::sort(candidates.begin(), candidates.end());
  for (const std::string& node : candidates) {
    const TransportNode& n = *instance.find_node(node);
    builder.add_vertex(Vertex{lsr_vertex_id(node), 1, VertexKind::kLsrCandidate,
                              n.lsr_install_cost, n.throughput_limit});
    Edge map;
    map.id = lsr_mapping_edge_id(node);
    map.a = lsr_vertex_id(node);
    map.b = node;
    map.kind = EdgeKind::kInterLayer;
    builder.add_edge(std::move(map));
  }

  // Candidate logical adjacencies. Pairs are ranked by (transport hop
  // distance, ids) before the optional degree cap is applied so that the
  // cap keeps the tightest adjacencies.
  MultiLayerGraph partial;  // transport-only view for path search
  {
    MlgBuilder probe;
    probe.add_layer();
    for (const TransportNode& n : instance.nodes)
      probe.add_vertex(Vertex{n.id, 0, VertexKind::kTransportNode, 0, std::nullopt});
    for (const TransportLink& l : instance.links) {
      Edge e;
      e.id = l.id();
      e.a = l.a;
      e.b = l.b;
      e.kind = EdgeKind::kIntraLayer;
      e.weight = l.fixed_cost;
      e.capacity = l.max_capacity();
      probe.add_edge(std::move(e));
    }
    partial = probe.build();
  }
  const LayerView transport = layer_subgraph(partial, 0);
  const auto adj = transport_adjacency(transport);

  std::map<std::string, std::map<std::string, int>> hops;
  for (const std::string& node : candidates)
    hops[node] = detail::hop_distances(adj, node);

  struct PairCandidate {
    int hop_distance;
    std::string a;  // a < b
    std::string b;
  };
  std::vector<PairCandidate> pairs;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      const std::string& a = candidates[i];
      const std::string& b = candidates[j];
      auto it = hops[a].find(b);
      if (it == hops[a].end()) continue;  // unreachable, no candidate edge
      if (instance.policy.rule == LogicalEdgeRule::kDistanceLimited &&
          it->second > instance.policy.hop_bound)
        continue;
      pairs.push_back({it->second, a, b});
    }
  std::sort(pairs.begin(), pairs.end(), [](const PairCandidate& x, const PairCandidate& y) {
    return std::tie(x.hop_distance, x.a, x.b) < std::tie(y.hop_distance, y.a, y.b);
  });

  std::map<std::string, int> degree;
  std::vector<std::pair<std::string, std::string>> accepted_pairs;
  const int degree_cap =
      instance.policy.max_logical_degree.value_or(static_cast<int>(candidates.size()));
  for (const PairCandidate& pc : pairs) {
    if (degree[pc.a] >= degree_cap || degree[pc.b] >= degree_cap) continue;
    ++degree[pc.a];
    ++degree[pc.b];
    accepted_pairs.emplace_back(pc.a, pc.b);
  }
  std::sort(accepted_pairs.begin(), accepted_pairs.end());

  std::set<std::pair<std::string, std::string>> logical_present;
  for (const auto& [a, b] : accepted_pairs) {
    auto paths = candidate_paths(transport, a, b, instance.policy.k_paths);
    if (paths.empty()) continue;  // never emit a logical edge without a path
    Edge e;
    e.id = logical_edge_id(a, b);
    e.a = lsr_vertex_id(a);
    e.b = lsr_vertex_id(b);
    e.kind = EdgeKind::kIntraLayer;
    e.weight = 0;  // cost is borne by the transport resources
    e.capacity = std::nullopt;
    e.candidate_paths = std::move(paths);
    builder.add_edge(std::move(e));
    logical_present.insert({a, b});
  }

  // One layer per demand: endpoints plus the projected adjacencies.
  for (const Demand& d : instance.demands) {
    const LayerId layer = builder.add_layer();
    std::vector<std::string> endpoints;
    endpoints.push_back(d.source);
    endpoints.insert(endpoints.end(), d.sinks.begin(), d.sinks.end());
    std::sort(endpoints.begin(), endpoints.end());
    for (const std::string& node : endpoints) {
      builder.add_vertex(
          Vertex{flow_vertex_id(d.id, node), layer, VertexKind::kFlowEndpoint, 0,
                 std::nullopt});
      Edge map;
      map.id = flow_mapping_edge_id(d.id, node);
      map.a = flow_vertex_id(d.id, node);
      map.b = lsr_vertex_id(node);
      map.kind = EdgeKind::kInterLayer;
      builder.add_edge(std::move(map));
    }
    for (std::size_t i = 0; i < endpoints.size(); ++i)
      for (std::size_t j = i + 1; j < endpoints.size(); ++j) {
        if (!logical_present.count({endpoints[i], endpoints[j]})) continue;
        Edge e;
        e.id = flow_edge_id(d.id, endpoints[i], endpoints[j]);
        e.a = flow_vertex_id(d.id, endpoints[i]);
        e.b = flow_vertex_id(d.id, endpoints[j]);
        e.kind = EdgeKind::kIntraLayer;
        builder.add_edge(std::move(e));
      }
  }

  MultiLayerGraph mlg = builder.build();
  log::debug("synthesized MLG: " + std::to_string(mlg.layer_count()) + " layers, " +
             std::to_string(mlg.vertices().size()) + " vertices, " +
             std::to_string(mlg.edges().size()) + " edges");
  return mlg;
}

}  // namespace mlgd
