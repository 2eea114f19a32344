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

#include "mlgd/instance.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <utility>

namespace mlgd {

namespace {

std::pair<std::string, std::string> sorted_pair(const std::string& x,
                                                const std::string& y) {
  return x <= y ? std::make_pair(x, y) : std::make_pair(y, x);
}

}  // namespace

std::string TransportLink::id() const {
  auto [lo, hi] = sorted_pair(a, b);
  return "t:" + lo + "-" + hi;
}

std::string to_string(SolverMode mode) {
  switch (mode) {
    case SolverMode::kGreedy: return "greedy";
    case SolverMode::kGreedyPlusLocalSearch: return "ls";
    case SolverMode::kExactBruteForce: return "exact";
  }
  return "?";
}

std::optional<SolverMode> solver_mode_from_string(const std::string& s) {
  if (s == "greedy") return SolverMode::kGreedy;
  if (s == "ls") return SolverMode::kGreedyPlusLocalSearch;
  if (s == "exact") return SolverMode::kExactBruteForce;
  return std::nullopt;
}

const TransportNode* Instance::find_node(const std::string& id) const {
  for (const auto& n : nodes)
    if (n.id == id) return &n;
  return nullptr;
}

const TransportLink* Instance::find_link(const std::string& link_id) const {
  for (const auto& l : links)
    if (l.id() == link_id) return &l;
  return nullptr;
}

const Demand* Instance::find_demand(const std::string& id) const {
  for (const auto& d : demands)
    if (d.id == id) return &d;
  return nullptr;
}

std::vector<std::string> check_instance(const Instance& instance) {
  std::vector<std::string> problems;
  auto flag = [&problems](std::string msg) { problems.push_back(std::move(msg)); };

  std::set<std::string> node_ids;
  std::set<std::string> candidates;
  for (const TransportNode& n : instance.nodes) {
    if (!node_ids.insert(n.id).second) flag("duplicate node id '" + n.id + "'");
    if (n.lsr_candidate) candidates.insert(n.id);
    if (n.lsr_install_cost < 0) flag("node '" + n.id + "' has negative install cost");
    if (!n.lsr_candidate && n.lsr_install_cost != 0)
      flag("node '" + n.id + "' has an install cost but is not an LSR candidate");
    if (!n.lsr_candidate && n.throughput_limit)
      flag("node '" + n.id + "' has a throughput limit but is not an LSR candidate");
    if (n.throughput_limit && *n.throughput_limit < 0)
      flag("node '" + n.id + "' has negative throughput limit");
  }
  if (instance.nodes.empty()) flag("no transport nodes");
  if (candidates.empty()) flag("no LSR candidate nodes");

  std::set<std::pair<std::string, std::string>> link_pairs;
  for (const TransportLink& l : instance.links) {
    const std::string label = "link '" + l.a + "-" + l.b + "'";
    if (!node_ids.count(l.a)) flag(label + " references unknown node '" + l.a + "'");
    if (!node_ids.count(l.b)) flag(label + " references unknown node '" + l.b + "'");
    if (l.a == l.b) flag(label + " is a self-loop");
    if (!link_pairs.insert(sorted_pair(l.a, l.b)).second)
      flag(label + " duplicates another link (parallel links are not allowed)");
    if (l.fixed_cost < 0) flag(label + " has negative fixed cost");
    if (l.module_size < 1) flag(label + " has module size < 1");
    if (l.module_cost < 0) flag(label + " has negative module cost");
    if (l.max_modules < 1) flag(label + " has max modules < 1");
  }

  std::set<std::string> demand_ids;
  for (const Demand& d : instance.demands) {
    const std::string label = "demand '" + d.id + "'";
    if (!demand_ids.insert(d.id).second) flag("duplicate demand id '" + d.id + "'");
    if (d.bandwidth < 1) flag(label + " has bandwidth < 1");
    if (d.sinks.empty()) flag(label + " has no sinks");
    std::set<std::string> sink_set;
    for (const std::string& s : d.sinks) {
      if (!sink_set.insert(s).second) flag(label + " lists sink '" + s + "' twice");
      if (s == d.source) flag(label + " has source equal to sink '" + s + "'");
      if (!candidates.count(s))
        flag(label + " sink '" + s + "' is not an LSR candidate node");
    }
    if (!candidates.count(d.source))
      flag(label + " source '" + d.source + "' is not an LSR candidate node");
  }

  if (instance.policy.k_paths < 1) flag("policy k_paths must be >= 1");
  if (instance.policy.max_logical_degree && *instance.policy.max_logical_degree < 1)
    flag("policy max_logical_degree must be >= 1");
  if (instance.policy.rule == LogicalEdgeRule::kDistanceLimited &&
      instance.policy.hop_bound < 1)
    flag("policy hop_bound must be >= 1 for the distance_limited rule");

  // Transport connectivity (only meaningful once ids are sound).
  if (problems.empty() && !instance.nodes.empty()) {
    std::map<std::string, std::vector<std::string>> adj;
    for (const TransportNode& n : instance.nodes) adj[n.id];
    for (const TransportLink& l : instance.links) {
      adj[l.a].push_back(l.b);
      adj[l.b].push_back(l.a);
    }
    std::set<std::string> reached{instance.nodes.front().id};
    std::deque<std::string> queue{instance.nodes.front().id};
    while (!queue.empty()) {
      const std::string cur = queue.front();
      queue.pop_front();
      for (const std::string& next : adj[cur])
        if (reached.insert(next).second) queue.push_back(next);
    }
    if (reached.size() != node_ids.size()) flag("transport graph is not connected");
  }

  return problems;
}

}  // namespace mlgd
