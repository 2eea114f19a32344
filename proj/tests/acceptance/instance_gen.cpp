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

#include "instance_gen.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace instgen {

namespace {

using mlgd::Bandwidth;
using mlgd::Demand;
using mlgd::Instance;
using mlgd::Money;
using mlgd::TransportLink;
using mlgd::TransportNode;

// Explicit draws keep the generator deterministic across standard
// library implementations.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  std::uint64_t operator()() { return gen(); }
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(gen() % n); }
};

std::string node_name(int i) { return "n" + std::to_string(i); }

// Random connected topology: a random attachment tree plus extra edges.
void build_topology(Rng& rng, int n, int extra_attempts, Instance& inst) {
  std::set<std::pair<int, int>> present;
  auto add_link = [&](int a, int b) {
    if (a == b) return;
    const auto key = std::minmax(a, b);
    if (!present.insert(key).second) return;
    TransportLink l;
    l.a = node_name(key.first);
    l.b = node_name(key.second);
    l.fixed_cost = rng.below(15);
    l.module_size = 1 + rng.below(10);
    l.module_cost = rng.below(6);
    l.max_modules = 1;  // resized later once demands are known
    inst.links.push_back(l);
  };
  for (int i = 1; i < n; ++i) add_link(rng.below(i), i);
  for (int k = 0; k < extra_attempts; ++k) add_link(rng.below(n), rng.below(n));
}

std::vector<int> pick_candidates(Rng& rng, int n, int count) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  order.resize(count);
  std::sort(order.begin(), order.end());
  return order;
}

}  // namespace

Instance generous(std::uint64_t seed) {
  Rng rng(seed);
  Instance inst;
  inst.name = "gen-" + std::to_string(seed);

  const int n = 2 + rng.below(5);  // 2..6 nodes
  for (int i = 0; i < n; ++i) {
    TransportNode node;
    node.id = node_name(i);
    inst.nodes.push_back(node);
  }
  build_topology(rng, n, rng.below(n + 1), inst);

  const int c = 1 + rng.below(std::min(4, n));  // 1..min(4,n) candidates
  const std::vector<int> candidates = pick_candidates(rng, n, c);
  for (int idx : candidates) {
    inst.nodes[idx].lsr_candidate = true;
    inst.nodes[idx].lsr_install_cost = rng.below(20);
  }

  Bandwidth total_bw = 0;
  if (c >= 2) {
    const int nd = rng.below(4);  // 0..3 demands
    for (int d = 0; d < nd; ++d) {
      Demand demand;
      demand.id = "d" + std::to_string(d);
      std::vector<int> order = candidates;
      for (int i = static_cast<int>(order.size()); i > 1; --i)
        std::swap(order[i - 1], order[rng.below(i)]);
      demand.source = node_name(order[0]);
      const int sinks = 1 + rng.below(std::min(2, c - 1));
      for (int s = 0; s < sinks; ++s) demand.sinks.push_back(node_name(order[1 + s]));
      std::sort(demand.sinks.begin(), demand.sinks.end());
      demand.bandwidth = 1 + rng.below(9);
      total_bw += demand.bandwidth;
      inst.demands.push_back(std::move(demand));
    }
  }

  // Capacity and throughput that can never bind. One link can be crossed
  // by several logical edges of the same demand tree (at most c-1 <= 3 of
  // them), so the worst conceivable link load is 3x the total bandwidth.
  for (TransportLink& l : inst.links)
    l.max_modules =
        static_cast<int>((3 * std::max<Bandwidth>(total_bw, 1) + l.module_size - 1) /
                         l.module_size) +
        1;
  for (TransportNode& node : inst.nodes) {
    if (!node.lsr_candidate) continue;
    if (rng.below(10) < 7)
      node.throughput_limit = std::nullopt;  // unbounded
    else
      node.throughput_limit = 4 * std::max<Bandwidth>(total_bw, 1);
  }

  inst.policy.k_paths = 1 + rng.below(2);
  inst.policy.rule = mlgd::LogicalEdgeRule::kFullMesh;
  return inst;
}

Instance cut_infeasible(std::uint64_t seed) {
  Rng rng(seed);
  Instance inst;
  inst.name = "cut-" + std::to_string(seed);

  const int n = 2 + rng.below(4);  // 2..5 nodes, tree topology only
  for (int i = 0; i < n; ++i) {
    TransportNode node;
    node.id = node_name(i);
    inst.nodes.push_back(node);
  }
  std::vector<int> parent(n, -1);
  for (int i = 1; i < n; ++i) {
    parent[i] = rng.below(i);
    TransportLink l;
    l.a = node_name(parent[i]);
    l.b = node_name(i);
    l.fixed_cost = rng.below(10);
    l.module_size = 5;
    l.module_cost = 1 + rng.below(4);
    l.max_modules = 100;  // generous except for the chosen bridge
    inst.links.push_back(l);
  }

  const int c = std::max(2, 1 + rng.below(std::min(4, n)));
  const std::vector<int> candidates = pick_candidates(rng, n, c);
  for (int idx : candidates) {
    inst.nodes[idx].lsr_candidate = true;
    inst.nodes[idx].lsr_install_cost = rng.below(20);
  }

  // One demand whose unique tree path crosses a strangled bridge.
  const int si = candidates[rng.below(c)];
  int ti = si;
  while (ti == si) ti = candidates[rng.below(c)];
  Demand demand;
  demand.id = "d0";
  demand.source = node_name(si);
  demand.sinks = {node_name(ti)};
  demand.bandwidth = 2 + rng.below(8);
  inst.demands.push_back(demand);

  // Walk t up to the root, marking the path; then walk s up until the
  // paths meet. The first edge off the source side is the bridge.
  std::vector<bool> on_t_path(n, false);
  for (int v = ti; v != -1; v = parent[v]) on_t_path[v] = true;
  int bridge_child = -1;
  if (on_t_path[si]) {
    // s is an ancestor of t: the bridge is t's edge to its parent.
    bridge_child = ti;
  } else {
    bridge_child = si;  // s's edge toward its parent is on every s-t path
  }
  for (TransportLink& l : inst.links) {
    const std::string child = node_name(bridge_child);
    const std::string par = node_name(parent[bridge_child]);
    if ((l.a == child && l.b == par) || (l.a == par && l.b == child)) {
      l.module_size = 1;
      l.max_modules = static_cast<int>(demand.bandwidth - 1);
    }
  }

  if (c > 2 && rng.below(2) == 0) {
    // A second demand, possibly feasible on its own; the instance stays
    // infeasible because of d0.
    int a = candidates[rng.below(c)];
    int b = a;
    while (b == a) b = candidates[rng.below(c)];
    Demand extra;
    extra.id = "d1";
    extra.source = node_name(a);
    extra.sinks = {node_name(b)};
    extra.bandwidth = 1 + rng.below(4);
    inst.demands.push_back(extra);
  }

  inst.policy.k_paths = 1 + rng.below(2);
  inst.policy.rule = mlgd::LogicalEdgeRule::kFullMesh;
  return inst;
}

}  // namespace instgen
