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

#include "mlgd/routing.hpp"

#include <algorithm>
#include <tuple>

#include "mlgd/synthesis.hpp"
#include "pathfind.hpp"

namespace mlgd {

LoadMap& LoadMap::operator+=(const LoadMap& other) {
  for (const auto& [k, v] : other.transport_link) transport_link[k] += v;
  for (const auto& [k, v] : other.logical_edge) logical_edge[k] += v;
  for (const auto& [k, v] : other.lsr_throughput) lsr_throughput[k] += v;
  return *this;
}

SteinerResult steiner_tree(const RoutingView& view,
                           const std::set<std::string>& terminals) {
  if (terminals.empty()) throw InputError("steiner_tree requires >= 1 terminal");
  for (const std::string& t : terminals)
    if (!view.vertices.count(t))
      throw InputError("terminal not in view: " + t);

  SteinerResult result;
  if (terminals.size() == 1) return result;  // a single terminal needs no edges

  detail::Adjacency adj;
  for (const std::string& v : view.vertices) adj.try_emplace(v);
  for (const ViewEdge& e : view.edges)
    detail::add_undirected_edge(adj, e.a, e.b, e.id, e.length);

  // Grow from the smallest terminal; attach the nearest remaining
  // terminal by a shortest path each round.
  std::set<std::string> in_tree{*terminals.begin()};
  std::set<std::string> remaining(std::next(terminals.begin()), terminals.end());

  while (!remaining.empty()) {
    std::optional<detail::FoundPath> best;
    std::string best_terminal;
    for (const std::string& t : remaining) {
      // Multi-source: connect t to the closest tree vertex. Searching
      // from t keeps the path keys comparable across terminals.
      std::optional<detail::FoundPath> nearest;
      for (const std::string& src : in_tree) {
        auto p = detail::shortest_path(adj, src, t);
        if (!p) continue;
        if (!nearest || detail::path_less(*p, *nearest)) nearest = std::move(p);
      }
      if (!nearest) {
        result.unreachable = t;
        return result;
      }
      if (!best || detail::path_less(*nearest, *best) ||
          (!detail::path_less(*best, *nearest) && t < best_terminal)) {
        best = std::move(nearest);
        best_terminal = t;
      }
    }
    for (const std::string& eid : best->edges) result.tree.insert(eid);
    for (const std::string& nid : best->nodes) in_tree.insert(nid);
    remaining.erase(best_terminal);
  }
  return result;
}

LoadMap map_down(const MultiLayerGraph& mlg, const MulticastRoute& route,
                 const Demand& demand) {
  LoadMap delta;
  std::map<std::string, int> degree;  // layer-1 vertex -> tree degree
  for (const std::string& eid : route.logical_tree) {
    const Edge& e = mlg.edge(eid);
    auto it = route.path_choice.find(eid);
    if (it == route.path_choice.end())
      throw StructuralError("route " + route.demand_id +
                            " has no path choice for tree edge " + eid);
    const int idx = it->second;
    if (idx < 0 || idx >= static_cast<int>(e.candidate_paths.size()))
      throw StructuralError("route " + route.demand_id + " path index " +
                            std::to_string(idx) + " out of range for " + eid);
    const TransportPath& path = e.candidate_paths[idx];
    for (const std::string& link : path.links)
      delta.transport_link[link] += demand.bandwidth;
    delta.logical_edge[eid] += demand.bandwidth;
    ++degree[e.a];
    ++degree[e.b];
  }
  for (const auto& [vertex, deg] : degree)
    delta.lsr_throughput[vertex] += static_cast<Bandwidth>(deg) * demand.bandwidth;
  return delta;
}

CapacityReport check_capacity(const Instance& instance, const LoadMap& load,
                              const std::map<std::string, int>& module_counts) {
  CapacityReport report;
  auto flag = [&report](const std::string& element, const std::string& message) {
    report.violations.push_back({element, message});
  };

  for (const TransportLink& l : instance.links) {
    const std::string id = l.id();
    auto load_it = load.transport_link.find(id);
    const Bandwidth used = load_it == load.transport_link.end() ? 0 : load_it->second;
    auto mod_it = module_counts.find(id);
    const int modules = mod_it == module_counts.end() ? 0 : mod_it->second;
    if (modules > l.max_modules)
      flag(id, "module count " + std::to_string(modules) + " exceeds max " +
                   std::to_string(l.max_modules));
    const Bandwidth capacity = static_cast<Bandwidth>(modules) * l.module_size;
    if (used > capacity)
      flag(id, "load " + std::to_string(used) + " exceeds dimensioned capacity " +
                   std::to_string(capacity));
  }

  for (const auto& [vertex, switched] : load.lsr_throughput) {
    if (vertex.rfind("lsr:", 0) != 0) {
      flag(vertex, "throughput recorded for a non-LSR element");
      continue;
    }
    const std::string node = node_of_lsr_vertex(vertex);
    const TransportNode* n = instance.find_node(node);
    if (n == nullptr || !n->lsr_candidate) {
      flag(vertex, "throughput recorded for a non-candidate node");
      continue;
    }
    if (n->throughput_limit && switched > *n->throughput_limit)
      flag(vertex, "switched throughput " + std::to_string(switched) +
                       " exceeds limit " + std::to_string(*n->throughput_limit));
  }

  std::sort(report.violations.begin(), report.violations.end(),
            [](const CapacityViolation& x, const CapacityViolation& y) {
              return std::tie(x.element, x.message) < std::tie(y.element, y.message);
            });
  return report;
}

std::map<std::string, int> dimension_loads(const Instance& instance,
                                           const LoadMap& load) {
  std::map<std::string, int> modules;
  for (const auto& [link_id, used] : load.transport_link) {
    if (used <= 0) continue;
    const TransportLink* l = instance.find_link(link_id);
    if (l == nullptr) throw StructuralError("load on unknown link: " + link_id);
    modules[link_id] = static_cast<int>((used + l->module_size - 1) / l->module_size);
  }
  return modules;
}

}  // namespace mlgd
