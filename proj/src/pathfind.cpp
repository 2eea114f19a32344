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

#include "pathfind.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <tuple>

namespace mlgd::detail {

void add_undirected_edge(Adjacency& adj, const std::string& a,
                         const std::string& b, const std::string& edge_id,
                         Money weight) {
  auto insert = [&](const std::string& from, const std::string& to) {
    auto& list = adj[from];
    AdjEdge e{to, edge_id, weight};
    auto pos = std::lower_bound(list.begin(), list.end(), e,
                                [](const AdjEdge& x, const AdjEdge& y) {
                                  return std::tie(x.to, x.edge_id) <
                                         std::tie(y.to, y.edge_id);
                                });
    list.insert(pos, std::move(e));
  };
  insert(a, b);
  insert(b, a);
  adj.try_emplace(a);
  adj.try_emplace(b);
}

bool path_less(const FoundPath& x, const FoundPath& y) {
  const int hx = x.hops();
  const int hy = y.hops();
  return std::tie(x.cost, hx, x.nodes) < std::tie(y.cost, hy, y.nodes);
}

namespace {

struct Label {
  Money cost = 0;
  int hops = 0;
  std::vector<std::string> nodes;
  std::vector<std::string> edges;

  bool operator>(const Label& other) const {
    return std::tie(cost, hops, nodes) > std::tie(other.cost, other.hops, other.nodes);
  }
};

}  // namespace

std::optional<FoundPath> shortest_path(const Adjacency& adj, const std::string& s,
                                       const std::string& t,
                                       const std::set<std::string>& banned_nodes,
                                       const std::set<std::string>& banned_edges) {
  if (banned_nodes.count(s) || banned_nodes.count(t)) return std::nullopt;
  if (!adj.count(s) || !adj.count(t)) return std::nullopt;

  std::priority_queue<Label, std::vector<Label>, std::greater<Label>> queue;
  queue.push(Label{0, 0, {s}, {}});
  std::set<std::string> settled;

  while (!queue.empty()) {
    Label cur = queue.top();
    queue.pop();
    const std::string& node = cur.nodes.back();
    if (settled.count(node)) continue;
    settled.insert(node);
    if (node == t)
      return FoundPath{std::move(cur.nodes), std::move(cur.edges), cur.cost};
    auto it = adj.find(node);
    if (it == adj.end()) continue;
    for (const AdjEdge& e : it->second) {
      if (settled.count(e.to) || banned_nodes.count(e.to) ||
          banned_edges.count(e.edge_id))
        continue;
      Label next = cur;
      next.cost += e.weight;
      next.hops += 1;
      next.nodes.push_back(e.to);
      next.edges.push_back(e.edge_id);
      queue.push(std::move(next));
    }
  }
  return std::nullopt;
}

std::vector<FoundPath> k_shortest_paths(const Adjacency& adj, const std::string& s,
                                        const std::string& t, int k) {
  std::vector<FoundPath> accepted;
  if (k <= 0) return accepted;
  auto first = shortest_path(adj, s, t);
  if (!first) return accepted;
  accepted.push_back(std::move(*first));

  // Candidate pool ordered by the composite order; node sequences make
  // the key total so equal-cost candidates coexist.
  auto set_cmp = [](const FoundPath& x, const FoundPath& y) {
    if (path_less(x, y)) return true;
    if (path_less(y, x)) return false;
    return x.nodes < y.nodes;
  };
  std::set<FoundPath, decltype(set_cmp)> candidates(set_cmp);
  std::set<std::vector<std::string>> known;  // node sequences in accepted or pool
  known.insert(accepted[0].nodes);

  while (static_cast<int>(accepted.size()) < k) {
    const FoundPath& prev = accepted.back();
    for (std::size_t spur_idx = 0; spur_idx + 1 < prev.nodes.size(); ++spur_idx) {
      const std::string& spur_node = prev.nodes[spur_idx];
      std::vector<std::string> root_nodes(prev.nodes.begin(),
                                          prev.nodes.begin() + spur_idx + 1);
      std::vector<std::string> root_edges(prev.edges.begin(),
                                          prev.edges.begin() + spur_idx);
      Money root_cost = 0;
      {
        // Recompute the root cost from the adjacency to stay exact.
        for (std::size_t i = 0; i < root_edges.size(); ++i) {
          const auto& list = adj.at(root_nodes[i]);
          for (const AdjEdge& e : list)
            if (e.edge_id == root_edges[i] && e.to == root_nodes[i + 1]) {
              root_cost += e.weight;
              break;
            }
        }
      }

      std::set<std::string> banned_edges;
      for (const FoundPath& p : accepted) {
        if (p.nodes.size() > spur_idx &&
            std::equal(root_nodes.begin(), root_nodes.end(), p.nodes.begin()) &&
            p.edges.size() > spur_idx)
          banned_edges.insert(p.edges[spur_idx]);
      }
      std::set<std::string> banned_nodes(root_nodes.begin(), root_nodes.end());
      banned_nodes.erase(spur_node);

      auto spur = shortest_path(adj, spur_node, t, banned_nodes, banned_edges);
      if (!spur) continue;

      FoundPath total;
      total.nodes = root_nodes;
      total.nodes.insert(total.nodes.end(), spur->nodes.begin() + 1,
                         spur->nodes.end());
      total.edges = root_edges;
      total.edges.insert(total.edges.end(), spur->edges.begin(), spur->edges.end());
      total.cost = root_cost + spur->cost;
      if (known.insert(total.nodes).second) candidates.insert(std::move(total));
    }
    if (candidates.empty()) break;
    accepted.push_back(*candidates.begin());
    candidates.erase(candidates.begin());
  }
  return accepted;
}

std::map<std::string, int> hop_distances(const Adjacency& adj, const std::string& s) {
  std::map<std::string, int> dist;
  if (!adj.count(s)) return dist;
  dist[s] = 0;
  std::deque<std::string> queue{s};
  while (!queue.empty()) {
    const std::string cur = queue.front();
    queue.pop_front();
    for (const AdjEdge& e : adj.at(cur)) {
      if (dist.count(e.to)) continue;
      dist[e.to] = dist[cur] + 1;
      queue.push_back(e.to);
    }
  }
  return dist;
}

}  // namespace mlgd::detail
