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

#include "mlgd/optimizer.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <limits>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "mlgd/log.hpp"
#include "mlgd/synthesis.hpp"

namespace mlgd {

namespace {

using Clock = std::chrono::steady_clock;

// Deterministic across platforms: mt19937_64 is fully specified and the
// draws below avoid std::shuffle / std::uniform_int_distribution, whose
// algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::size_t bounded(std::size_t n) { return n == 0 ? 0 : gen_() % n; }

 private:
  std::mt19937_64 gen_;
};

template <typename T>
void fisher_yates(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i)
    std::swap(items[i - 1], items[rng.bounded(i)]);
}

Bandwidth ceil_div(Bandwidth value, Bandwidth unit) {
  return (value + unit - 1) / unit;
}

std::set<std::string> demand_terminals(const Demand& d) {
  std::set<std::string> t{lsr_vertex_id(d.source)};
  for (const std::string& s : d.sinks) t.insert(lsr_vertex_id(s));
  return t;
}

// Instance demand indices in greedy routing order: descending bandwidth,
// ties by ascending id.
std::vector<std::size_t> greedy_order(const Instance& inst) {
  std::vector<std::size_t> order(inst.demands.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&inst](std::size_t x, std::size_t y) {
    const Demand& dx = inst.demands[x];
    const Demand& dy = inst.demands[y];
    return std::tie(dy.bandwidth, dx.id) < std::tie(dx.bandwidth, dy.id);
  });
  return order;
}

struct LogicalEdgeInfo {
  std::string id;
  std::string a;  // lsr vertex ids, a < b
  std::string b;
  const Edge* edge = nullptr;
};

std::vector<LogicalEdgeInfo> logical_edges_of(const MultiLayerGraph& mlg) {
  std::vector<LogicalEdgeInfo> out;
  for (const Edge& e : mlg.edges()) {
    if (e.kind != EdgeKind::kIntraLayer) continue;
    const Vertex* a = mlg.find_vertex(e.a);
    if (a == nullptr || a->layer != 1) continue;
    LogicalEdgeInfo info;
    info.id = e.id;
    info.a = std::min(e.a, e.b);
    info.b = std::max(e.a, e.b);
    info.edge = &e;
    out.push_back(std::move(info));
  }
  std::sort(out.begin(), out.end(),
            [](const LogicalEdgeInfo& x, const LogicalEdgeInfo& y) {
              return x.id < y.id;
            });
  return out;
}

// ---------------------------------------------------------------------------
// Working solver state shared by greedy construction and local search.
// ---------------------------------------------------------------------------

struct Working {
  const MultiLayerGraph* mlg = nullptr;
  const Instance* inst = nullptr;
  std::vector<std::optional<std::set<std::string>>> trees;  // per demand index
  std::set<std::string> installed;                          // layer-1 vertex ids
  std::map<std::string, int> path_choice;                   // active edges only

  Working(const MultiLayerGraph& g, const Instance& i) : mlg(&g), inst(&i) {
    trees.resize(i.demands.size());
  }

  std::vector<MulticastRoute> to_routes() const {
    std::vector<MulticastRoute> routes;
    for (std::size_t di = 0; di < trees.size(); ++di) {
      if (!trees[di])
        throw StructuralError("demand " + inst->demands[di].id + " is not routed");
      MulticastRoute r;
      r.demand_id = inst->demands[di].id;
      r.logical_tree = *trees[di];
      for (const std::string& eid : r.logical_tree) {
        auto it = path_choice.find(eid);
        if (it == path_choice.end())
          throw StructuralError("no path choice for active edge " + eid);
        r.path_choice[eid] = it->second;
      }
      routes.push_back(std::move(r));
    }
    return routes;
  }

  LoadMap loads() const {
    LoadMap total;
    for (std::size_t di = 0; di < trees.size(); ++di) {
      if (!trees[di]) continue;
      MulticastRoute r;
      r.demand_id = inst->demands[di].id;
      r.logical_tree = *trees[di];
      for (const std::string& eid : r.logical_tree) r.path_choice[eid] = path_choice.at(eid);
      total += map_down(*mlg, r, inst->demands[di]);
    }
    return total;
  }

  Money cost() const {
    Money sum = 0;
    for (const std::string& vid : installed) sum += mlg->vertex(vid).node_cost;
    const LoadMap load = loads();
    for (const auto& [link_id, used] : load.transport_link) {
      if (used <= 0) continue;
      const TransportLink* l = inst->find_link(link_id);
      if (l == nullptr) throw StructuralError("load on unknown link " + link_id);
      sum += l->fixed_cost + ceil_div(used, l->module_size) * l->module_cost;
    }
    return sum;
  }

  bool feasible_now() const {
    const LoadMap load = loads();
    return check_capacity(*inst, load, dimension_loads(*inst, load)).feasible();
  }

  void strip_demand(std::size_t di) {
    if (!trees[di]) return;
    trees[di].reset();
    // Drop path choices no other demand still uses.
    std::set<std::string> still_used;
    for (const auto& t : trees)
      if (t)
        for (const std::string& eid : *t) still_used.insert(eid);
    for (auto it = path_choice.begin(); it != path_choice.end();)
      it = still_used.count(it->first) ? std::next(it) : path_choice.erase(it);
  }

  // Marginal objective cost of sending `bw` more units over candidate
  // path `p`, given tentative link loads. nullopt = does not fit.
  std::optional<Money> path_marginal(const TransportPath& p, Bandwidth bw,
                                     const std::map<std::string, Bandwidth>& link_load) const {
    Money sum = 0;
    for (const std::string& link_id : p.links) {
      const TransportLink* l = inst->find_link(link_id);
      if (l == nullptr) throw StructuralError("unknown link on path: " + link_id);
      auto it = link_load.find(link_id);
      const Bandwidth before = it == link_load.end() ? 0 : it->second;
      const Bandwidth after = before + bw;
      const Bandwidth mods_before = ceil_div(before, l->module_size);
      const Bandwidth mods_after = ceil_div(after, l->module_size);
      if (mods_after > l->max_modules) return std::nullopt;
      if (before == 0) sum += l->fixed_cost;
      sum += (mods_after - mods_before) * l->module_cost;
    }
    return sum;
  }

  // Cheapest candidate path of `e` for `bw` more units: (marginal, index).
  std::optional<std::pair<Money, int>> best_candidate(
      const Edge& e, Bandwidth bw,
      const std::map<std::string, Bandwidth>& link_load) const {
    std::optional<std::pair<Money, int>> best;
    for (int idx = 0; idx < static_cast<int>(e.candidate_paths.size()); ++idx) {
      auto m = path_marginal(e.candidate_paths[idx], bw, link_load);
      if (!m) continue;
      if (!best || *m < best->first) best = {{*m, idx}};
    }
    return best;
  }

  // Marginal cost of routing `bw` over logical edge `e` under the
  // tentative state; respects an existing path choice.
  std::optional<Money> edge_marginal(const Edge& e, Bandwidth bw,
                                     const std::map<std::string, Bandwidth>& link_load,
                                     const std::map<std::string, int>& tentative_pc) const {
    auto pc = tentative_pc.find(e.id);
    if (pc != tentative_pc.end())
      return path_marginal(e.candidate_paths[pc->second], bw, link_load);
    auto best = best_candidate(e, bw, link_load);
    if (!best) return std::nullopt;
    return best->first;
  }

  // Routes demand `di` with Takahashi-Matsuyama over marginal costs,
  // lazily installing LSRs and charging everything as marginal lengths.
  // `forbidden` are layer-1 vertex ids that must not be touched.
  bool route_demand(std::size_t di, const std::set<std::string>& forbidden,
                    std::optional<std::string> start_override,
                    std::string* fail_reason);
};

struct DijkstraLabel {
  Money cost = 0;
  int hops = 0;
  std::vector<std::string> nodes;
  std::vector<std::string> edges;

  bool operator>(const DijkstraLabel& o) const {
    return std::tie(cost, hops, nodes) > std::tie(o.cost, o.hops, o.nodes);
  }
};

bool Working::route_demand(std::size_t di, const std::set<std::string>& forbidden,
                           std::optional<std::string> start_override,
                           std::string* fail_reason) {
  const Demand& d = inst->demands[di];
  const Bandwidth bw = d.bandwidth;
  const std::set<std::string> terminals = demand_terminals(d);
  auto fail = [&](const std::string& reason) {
    if (fail_reason) *fail_reason = reason;
    return false;
  };

  for (const std::string& t : terminals) {
    if (mlg->find_vertex(t) == nullptr)
      return fail("demand endpoint " + t + " is not in the candidate graph");
    if (forbidden.count(t)) return fail("terminal " + t + " is excluded");
  }
  strip_demand(di);

  const LoadMap base = loads();  // every other demand
  const std::string start = start_override.value_or(*terminals.begin());
  if (!terminals.count(start))
    throw InputError("start vertex is not a terminal: " + start);

  // Logical adjacency of the candidate graph.
  std::map<std::string, std::vector<const Edge*>> adjacency;
  for (const Edge& e : mlg->edges()) {
    if (e.kind != EdgeKind::kIntraLayer) continue;
    const Vertex* va = mlg->find_vertex(e.a);
    if (va == nullptr || va->layer != 1) continue;
    adjacency[e.a].push_back(&e);
    adjacency[e.b].push_back(&e);
  }
  for (auto& [_, list] : adjacency)
    std::sort(list.begin(), list.end(),
              [](const Edge* x, const Edge* y) { return x->id < y->id; });

  std::set<std::string> forbidden_all = forbidden;
  const std::size_t max_retries = adjacency.size() + 1;

  for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
    std::map<std::string, Bandwidth> links = base.transport_link;
    std::set<std::string> tentative_installed = installed;
    std::map<std::string, int> tentative_pc = path_choice;
    std::set<std::string> tree_edges;
    std::set<std::string> tree_vertices{start};
    tentative_installed.insert(start);
    std::set<std::string> remaining = terminals;
    remaining.erase(start);
    std::set<std::string> banned_edges;

    while (!remaining.empty()) {
      // Multi-source label-setting search over dynamic marginal costs.
      std::priority_queue<DijkstraLabel, std::vector<DijkstraLabel>,
                          std::greater<DijkstraLabel>>
          queue;
      for (const std::string& v : tree_vertices) queue.push({0, 0, {v}, {}});
      std::set<std::string> settled;
      std::optional<DijkstraLabel> reached;
      std::string reached_terminal;

      while (!queue.empty()) {
        DijkstraLabel cur = queue.top();
        queue.pop();
        const std::string node = cur.nodes.back();
        if (settled.count(node)) continue;
        settled.insert(node);
        if (remaining.count(node)) {
          reached = cur;
          reached_terminal = node;
          break;
        }
        auto adj_it = adjacency.find(node);
        if (adj_it == adjacency.end()) continue;
        for (const Edge* e : adj_it->second) {
          const std::string& next = e->a == node ? e->b : e->a;
          if (settled.count(next) || forbidden_all.count(next) ||
              banned_edges.count(e->id))
            continue;
          const auto marginal = edge_marginal(*e, bw, links, tentative_pc);
          if (!marginal) continue;
          const Vertex& vnext = mlg->vertex(next);
          // Conservative throughput guard; the exact degree-based check
          // runs after the tree is complete.
          if (vnext.throughput_limit) {
            auto tp = base.lsr_throughput.find(next);
            const Bandwidth other = tp == base.lsr_throughput.end() ? 0 : tp->second;
            if (other + bw > *vnext.throughput_limit) continue;
          }
          Money enter = tentative_installed.count(next) ? 0 : vnext.node_cost;
          DijkstraLabel lab = cur;
          lab.cost += *marginal + enter;
          lab.hops += 1;
          lab.nodes.push_back(next);
          lab.edges.push_back(e->id);
          queue.push(std::move(lab));
        }
      }

      if (!reached) {
        // Name the smallest unreachable terminal.
        return fail("terminal " + *remaining.begin() + " unreachable in the " +
                    "candidate logical graph");
      }

      // Commit the augmenting path edge by edge; marginals are recomputed
      // against the evolving tentative loads, so edges of one path that
      // share transport links are charged consistently.
      const auto snapshot_links = links;
      const auto snapshot_installed = tentative_installed;
      const auto snapshot_pc = tentative_pc;
      bool redo = false;
      for (std::size_t i = 0; i < reached->edges.size(); ++i) {
        const Edge& e = mlg->edge(reached->edges[i]);
        int idx = -1;
        auto pc_it = tentative_pc.find(e.id);
        if (pc_it != tentative_pc.end()) {
          idx = pc_it->second;
          if (!path_marginal(e.candidate_paths[idx], bw, links)) {
            banned_edges.insert(e.id);
            redo = true;
            break;
          }
        } else {
          auto best = best_candidate(e, bw, links);
          if (!best) {
            banned_edges.insert(e.id);
            redo = true;
            break;
          }
          idx = best->second;
          tentative_pc[e.id] = idx;
        }
        for (const std::string& link : e.candidate_paths[idx].links)
          links[link] += bw;
        tree_edges.insert(e.id);
        tree_vertices.insert(reached->nodes[i]);
        tree_vertices.insert(reached->nodes[i + 1]);
        tentative_installed.insert(reached->nodes[i + 1]);
      }
      if (redo) {
        links = snapshot_links;
        tentative_installed = snapshot_installed;
        tentative_pc = snapshot_pc;
        continue;  // replan with the edge banned
      }
      remaining.erase(reached_terminal);
    }

    // Exact throughput accounting over the finished tree.
    std::map<std::string, int> degree;
    for (const std::string& eid : tree_edges) {
      const Edge& e = mlg->edge(eid);
      ++degree[e.a];
      ++degree[e.b];
    }
    std::optional<std::string> offender;
    for (const auto& [v, deg] : degree) {
      const Vertex& vx = mlg->vertex(v);
      if (!vx.throughput_limit) continue;
      auto tp = base.lsr_throughput.find(v);
      const Bandwidth other = tp == base.lsr_throughput.end() ? 0 : tp->second;
      if (other + static_cast<Bandwidth>(deg) * bw > *vx.throughput_limit) {
        offender = v;
        break;  // maps iterate in id order: smallest offender
      }
    }
    if (offender) {
      if (terminals.count(*offender))
        return fail("terminal " + *offender + " exceeds its throughput limit");
      forbidden_all.insert(*offender);
      continue;  // retry without the offender
    }

    trees[di] = std::move(tree_edges);
    installed = std::move(tentative_installed);
    path_choice = std::move(tentative_pc);
    return true;
  }
  return fail("routing retries exhausted for demand " + d.id);
}

Working working_from_design(const MultiLayerGraph& mlg, const Instance& inst,
                            const Design& design) {
  Working w(mlg, inst);
  if (design.routes.size() != inst.demands.size())
    throw StructuralError("design does not route every demand");
  for (std::size_t di = 0; di < inst.demands.size(); ++di) {
    const MulticastRoute& r = design.routes[di];
    if (r.demand_id != inst.demands[di].id)
      throw StructuralError("route order does not match demand order");
    w.trees[di] = r.logical_tree;
    for (const auto& [eid, idx] : r.path_choice) {
      auto it = w.path_choice.find(eid);
      if (it != w.path_choice.end() && it->second != idx)
        throw StructuralError("routes disagree on the path choice of " + eid);
      w.path_choice[eid] = idx;
    }
  }
  for (const std::string& vid : design.selection.vertices) {
    const Vertex* v = mlg.find_vertex(vid);
    if (v != nullptr && v->layer == 1) w.installed.insert(vid);
  }
  return w;
}

}  // namespace

// ---------------------------------------------------------------------------
// Design assembly and the objective.
// ---------------------------------------------------------------------------

Design assemble_design(const MultiLayerGraph& mlg, const Instance& instance,
                       std::vector<MulticastRoute> routes) {
  return assemble_design_with_installs(mlg, instance, std::move(routes), {});
}

Design assemble_design_with_installs(const MultiLayerGraph& mlg,
                                     const Instance& instance,
                                     std::vector<MulticastRoute> routes,
                                     std::set<std::string> installed) {
  Design design;

  LoadMap loads;
  for (std::size_t di = 0; di < routes.size(); ++di) {
    const Demand* d = instance.find_demand(routes[di].demand_id);
    if (d == nullptr)
      throw StructuralError("route for unknown demand " + routes[di].demand_id);
    loads += map_down(mlg, routes[di], *d);
  }
  design.dimensioning = dimension_loads(instance, loads);

  Selection& sel = design.selection;
  for (const MulticastRoute& r : routes)
    for (const std::string& eid : r.logical_tree) {
      const Edge& e = mlg.edge(eid);
      installed.insert(e.a);
      installed.insert(e.b);
      sel.edges.insert(eid);
      const TransportPath& p = e.candidate_paths.at(r.path_choice.at(eid));
      for (const std::string& link : p.links) sel.edges.insert(link);
      for (const std::string& node : p.nodes) sel.vertices.insert(node);
    }
  for (const std::string& vid : installed) {
    sel.vertices.insert(vid);
    sel.edges.insert(lsr_mapping_edge_id(node_of_lsr_vertex(vid)));
    sel.vertices.insert(node_of_lsr_vertex(vid));  // its transport image
  }
  // Flow layers: the demand endpoints, their mapping edges, and the
  // projected tree edges that join two endpoints directly.
  for (const MulticastRoute& r : routes) {
    const Demand& d = *instance.find_demand(r.demand_id);
    std::set<std::string> endpoints{d.source};
    endpoints.insert(d.sinks.begin(), d.sinks.end());
    for (const std::string& node : endpoints) {
      sel.vertices.insert(flow_vertex_id(d.id, node));
      sel.edges.insert(flow_mapping_edge_id(d.id, node));
    }
    for (const std::string& eid : r.logical_tree) {
      const Edge& e = mlg.edge(eid);
      const std::string na = node_of_lsr_vertex(e.a);
      const std::string nb = node_of_lsr_vertex(e.b);
      if (endpoints.count(na) && endpoints.count(nb)) {
        const std::string fid = flow_edge_id(d.id, na, nb);
        if (mlg.find_edge(fid) != nullptr) sel.edges.insert(fid);
      }
    }
  }

  design.routes = std::move(routes);
  design.cost = objective(mlg, instance, design);
  return design;
}

LoadMap design_loads(const MultiLayerGraph& mlg, const Instance& instance,
                     const Design& design) {
  LoadMap loads;
  for (const MulticastRoute& r : design.routes) {
    const Demand* d = instance.find_demand(r.demand_id);
    if (d == nullptr)
      throw StructuralError("route for unknown demand " + r.demand_id);
    loads += map_down(mlg, r, *d);
  }
  return loads;
}

Money objective(const MultiLayerGraph& mlg, const Instance& instance,
                const Design& design) {
  // Routes: one per demand, in order, each a tree over installed LSRs.
  if (design.routes.size() != instance.demands.size())
    throw StructuralError("design must carry one route per demand");
  std::map<std::string, int> agreed;
  for (std::size_t di = 0; di < design.routes.size(); ++di) {
    const MulticastRoute& r = design.routes[di];
    const Demand& d = instance.demands[di];
    if (r.demand_id != d.id)
      throw StructuralError("route order does not match demand order");
    if (r.path_choice.size() != r.logical_tree.size())
      throw StructuralError("path_choice must cover exactly the tree edges of " + d.id);

    std::map<std::string, std::vector<std::string>> tree_adj;
    for (const std::string& eid : r.logical_tree) {
      const Edge& e = mlg.edge(eid);
      const Vertex& va = mlg.vertex(e.a);
      if (e.kind != EdgeKind::kIntraLayer || va.layer != 1)
        throw StructuralError("route tree edge " + eid + " is not a logical edge");
      auto pc = r.path_choice.find(eid);
      if (pc == r.path_choice.end())
        throw StructuralError("missing path choice for " + eid);
      if (pc->second < 0 || pc->second >= static_cast<int>(e.candidate_paths.size()))
        throw StructuralError("path index out of range for " + eid);
      auto [it, inserted] = agreed.emplace(eid, pc->second);
      if (!inserted && it->second != pc->second)
        throw StructuralError("routes disagree on the path choice of " + eid);
      if (!design.selection.edges.count(eid))
        throw StructuralError("route uses unselected logical edge " + eid);
      tree_adj[e.a].push_back(e.b);
      tree_adj[e.b].push_back(e.a);
    }
    // The tree must be acyclic and span the demand terminals.
    const std::set<std::string> terminals = demand_terminals(d);
    if (!r.logical_tree.empty()) {
      if (static_cast<std::size_t>(tree_adj.size()) != r.logical_tree.size() + 1)
        throw StructuralError("route of " + d.id + " is not a tree");
      std::set<std::string> seen;
      std::vector<std::string> stack{tree_adj.begin()->first};
      seen.insert(stack.back());
      while (!stack.empty()) {
        const std::string cur = stack.back();
        stack.pop_back();
        for (const std::string& next : tree_adj[cur])
          if (seen.insert(next).second) stack.push_back(next);
      }
      if (seen.size() != tree_adj.size())
        throw StructuralError("route of " + d.id + " is not connected");
    }
    for (const std::string& t : terminals)
      if (terminals.size() > 1 && !tree_adj.count(t))
        throw StructuralError("route of " + d.id + " does not span terminal " + t);
  }

  // Selection sanity: closed under incidence, logical edges all used.
  if (!validate_selection(mlg, design.selection).empty())
    throw StructuralError("design selection is not incidence-closed");
  std::set<std::string> used_logical;
  for (const MulticastRoute& r : design.routes)
    for (const std::string& eid : r.logical_tree) used_logical.insert(eid);
  for (const std::string& eid : design.selection.edges) {
    const Edge& e = mlg.edge(eid);
    if (e.kind != EdgeKind::kIntraLayer) continue;
    const Vertex& va = mlg.vertex(e.a);
    if (va.layer == 1 && !used_logical.count(eid))
      throw StructuralError("selected logical edge " + eid + " is unused");
  }

  // Dimensioning must be the minimal module cover of the routed loads.
  const LoadMap loads = design_loads(mlg, instance, design);
  const auto minimal = dimension_loads(instance, loads);
  if (design.dimensioning != minimal)
    throw StructuralError("dimensioning is not the minimal module cover");

  Money equip = 0;
  for (const std::string& vid : design.selection.vertices) {
    const Vertex& v = mlg.vertex(vid);
    if (v.layer == 1) equip += v.node_cost;
  }
  Money transport = 0;
  for (const auto& [link_id, modules] : design.dimensioning) {
    if (modules < 1) throw StructuralError("dimensioning with zero modules: " + link_id);
    const TransportLink* l = instance.find_link(link_id);
    if (l == nullptr) throw StructuralError("dimensioned unknown link " + link_id);
    transport += l->fixed_cost + static_cast<Money>(modules) * l->module_cost;
  }
  return equip + transport;
}

std::string design_encoding(const Design& design) {
  std::ostringstream os;
  os << "lsr{";
  bool first = true;
  for (const std::string& vid : design.selection.vertices) {
    if (vid.rfind("lsr:", 0) != 0) continue;
    os << (first ? "" : ",") << vid;
    first = false;
  }
  os << "}|pc{";
  std::map<std::string, int> pc;
  for (const MulticastRoute& r : design.routes)
    for (const auto& [eid, idx] : r.path_choice) pc[eid] = idx;
  first = true;
  for (const auto& [eid, idx] : pc) {
    os << (first ? "" : ",") << eid << "=" << idx;
    first = false;
  }
  os << "}|r{";
  first = true;
  for (const MulticastRoute& r : design.routes) {
    os << (first ? "" : ";") << r.demand_id << ":[";
    bool f2 = true;
    for (const std::string& eid : r.logical_tree) {
      os << (f2 ? "" : ",") << eid;
      f2 = false;
    }
    os << "]";
    first = false;
  }
  os << "}|dim{";
  first = true;
  for (const auto& [link_id, modules] : design.dimensioning) {
    os << (first ? "" : ",") << link_id << "=" << modules;
    first = false;
  }
  os << "}";
  return os.str();
}

// ---------------------------------------------------------------------------
// Greedy construction.
// ---------------------------------------------------------------------------

SolveResult greedy_construct(const MultiLayerGraph& mlg, const Instance& instance) {
  Working w(mlg, instance);
  for (std::size_t di : greedy_order(instance)) {
    std::string reason;
    if (!w.route_demand(di, {}, std::nullopt, &reason)) {
      return InfeasibilityCertificate{"demand", instance.demands[di].id, reason};
    }
  }
  return assemble_design_with_installs(mlg, instance, w.to_routes(), w.installed);
}

// ---------------------------------------------------------------------------
// Local search.
// ---------------------------------------------------------------------------

namespace {

struct Move {
  enum Kind { kToggleLsr, kSwitchPath, kReroot } kind;
  std::string element;  // lsr vertex / logical edge / demand id
  int index = -1;       // path index or demand index
  std::string start;    // re-root start terminal
};

std::vector<Move> enumerate_moves(const Working& w) {
  std::vector<Move> moves;
  std::vector<std::string> candidates;
  for (const Vertex& v : w.mlg->vertices())
    if (v.layer == 1 && v.kind == VertexKind::kLsrCandidate)
      candidates.push_back(v.id);
  std::sort(candidates.begin(), candidates.end());
  for (const std::string& vid : candidates)
    moves.push_back({Move::kToggleLsr, vid, -1, ""});

  for (const auto& [eid, cur] : w.path_choice) {
    const Edge& e = w.mlg->edge(eid);
    for (int idx = 0; idx < static_cast<int>(e.candidate_paths.size()); ++idx)
      if (idx != cur) moves.push_back({Move::kSwitchPath, eid, idx, ""});
  }

  for (std::size_t di = 0; di < w.inst->demands.size(); ++di)
    for (const std::string& t : demand_terminals(w.inst->demands[di]))
      moves.push_back({Move::kReroot, w.inst->demands[di].id,
                       static_cast<int>(di), t});
  return moves;
}

std::optional<Working> apply_move(const Working& w, const Move& move) {
  switch (move.kind) {
    case Move::kToggleLsr: {
      const std::string& v = move.element;
      if (w.installed.count(v)) {
        // Removal: terminals cannot lose their LSR.
        for (const Demand& d : w.inst->demands)
          if (demand_terminals(d).count(v)) return std::nullopt;
        Working c = w;
        std::vector<std::size_t> affected;
        for (std::size_t di = 0; di < c.trees.size(); ++di) {
          if (!c.trees[di]) continue;
          bool touches = false;
          for (const std::string& eid : *c.trees[di]) {
            const Edge& e = c.mlg->edge(eid);
            if (e.a == v || e.b == v) touches = true;
          }
          if (touches) affected.push_back(di);
        }
        for (std::size_t di : affected) c.strip_demand(di);
        c.installed.erase(v);
        const auto order = greedy_order(*c.inst);
        for (std::size_t di : order) {
          if (std::find(affected.begin(), affected.end(), di) == affected.end())
            continue;
          if (!c.route_demand(di, {v}, std::nullopt, nullptr)) return std::nullopt;
        }
        return c;
      }
      // Install: give every demand the chance to use the new LSR.
      Working c = w;
      c.installed.insert(v);
      for (std::size_t di = 0; di < c.trees.size(); ++di) c.strip_demand(di);
      for (std::size_t di : greedy_order(*c.inst))
        if (!c.route_demand(di, {}, std::nullopt, nullptr)) return std::nullopt;
      return c;
    }
    case Move::kSwitchPath: {
      auto it = w.path_choice.find(move.element);
      if (it == w.path_choice.end() || it->second == move.index) return std::nullopt;
      const Edge& e = w.mlg->edge(move.element);
      if (move.index < 0 || move.index >= static_cast<int>(e.candidate_paths.size()))
        return std::nullopt;
      Working c = w;
      c.path_choice[move.element] = move.index;
      if (!c.feasible_now()) return std::nullopt;
      return c;
    }
    case Move::kReroot: {
      Working c = w;
      const auto di = static_cast<std::size_t>(move.index);
      if (!c.route_demand(di, {}, move.start, nullptr)) return std::nullopt;
      return c;
    }
  }
  return std::nullopt;
}

}  // namespace

Design local_search(const MultiLayerGraph& mlg, const Instance& instance,
                    const Design& seed_design, int budget, std::uint64_t rng_seed) {
  if (budget <= 0) return seed_design;
  Working w = working_from_design(mlg, instance, seed_design);
  Money current = objective(mlg, instance, seed_design);
  Rng rng(rng_seed);
  int evaluations = 0;

  while (true) {
    std::vector<Move> moves = enumerate_moves(w);
    fisher_yates(moves, rng);
    bool improved = false;
    for (const Move& move : moves) {
      if (evaluations >= budget) {
        return assemble_design_with_installs(mlg, instance, w.to_routes(), w.installed);
      }
      ++evaluations;
      auto candidate = apply_move(w, move);
      if (!candidate) continue;
      const Money cost = candidate->cost();
      if (cost < current) {
        w = std::move(*candidate);
        current = cost;
        improved = true;
        break;
      }
    }
    if (!improved) break;  // local optimum
  }
  return assemble_design_with_installs(mlg, instance, w.to_routes(), w.installed);
}

// ---------------------------------------------------------------------------
// Exact brute force.
// ---------------------------------------------------------------------------

namespace {

// All acyclic connected edge sets spanning `terminals` whose leaves are
// terminals, rooted at the smallest terminal. Each subset is produced
// exactly once by binary take/forbid branching over the minimal eligible
// edge.
void enumerate_trees_rec(const std::vector<LogicalEdgeInfo>& edges,
                         const std::set<std::string>& allowed_vertices,
                         const std::set<std::string>& terminals,
                         std::set<std::string>& tree_vertices,
                         std::vector<std::string>& tree_edges,
                         std::set<std::string>& forbidden,
                         std::vector<std::vector<std::string>>& out) {
  // Minimal eligible edge: smallest id, exactly one endpoint in the tree.
  const LogicalEdgeInfo* next = nullptr;
  for (const LogicalEdgeInfo& e : edges) {
    if (forbidden.count(e.id)) continue;
    if (!allowed_vertices.count(e.a) || !allowed_vertices.count(e.b)) continue;
    const bool in_a = tree_vertices.count(e.a) > 0;
    const bool in_b = tree_vertices.count(e.b) > 0;
    if (in_a == in_b) continue;  // cycle edge or detached edge
    next = &e;
    break;
  }
  if (next == nullptr) {
    // Emit when the tree spans the terminals with terminal leaves only.
    for (const std::string& t : terminals)
      if (!tree_vertices.count(t)) return;
    std::map<std::string, int> degree;
    for (const std::string& eid : tree_edges)
      for (const LogicalEdgeInfo& e : edges)
        if (e.id == eid) {
          ++degree[e.a];
          ++degree[e.b];
        }
    for (const auto& [v, deg] : degree)
      if (deg == 1 && !terminals.count(v)) return;
    out.push_back(tree_edges);
    return;
  }

  const std::string grown = tree_vertices.count(next->a) ? next->b : next->a;

  // Take.
  tree_vertices.insert(grown);
  tree_edges.push_back(next->id);
  enumerate_trees_rec(edges, allowed_vertices, terminals, tree_vertices, tree_edges,
                      forbidden, out);
  tree_edges.pop_back();
  tree_vertices.erase(grown);

  // Forbid.
  forbidden.insert(next->id);
  enumerate_trees_rec(edges, allowed_vertices, terminals, tree_vertices, tree_edges,
                      forbidden, out);
  forbidden.erase(next->id);
}

std::vector<std::vector<std::string>> enumerate_steiner_trees(
    const std::vector<LogicalEdgeInfo>& edges,
    const std::set<std::string>& allowed_vertices,
    const std::set<std::string>& terminals) {
  std::vector<std::vector<std::string>> out;
  if (terminals.empty()) return out;
  for (const std::string& t : terminals)
    if (!allowed_vertices.count(t)) return out;
  if (terminals.size() == 1) {
    out.push_back({});
    return out;
  }
  std::set<std::string> tree_vertices{*terminals.begin()};
  std::vector<std::string> tree_edges;
  std::set<std::string> forbidden;
  enumerate_trees_rec(edges, allowed_vertices, terminals, tree_vertices, tree_edges,
                      forbidden, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SolveResult exact_bruteforce(const MultiLayerGraph& mlg, const Instance& instance,
                             const OracleLimits& limits, double time_limit_s) {
  std::vector<std::string> candidates;
  for (const TransportNode& n : instance.nodes)
    if (n.lsr_candidate) candidates.push_back(lsr_vertex_id(n.id));
  std::sort(candidates.begin(), candidates.end());

  if (static_cast<int>(candidates.size()) > limits.max_lsr_candidates ||
      static_cast<int>(instance.demands.size()) > limits.max_demands ||
      instance.policy.k_paths > limits.max_k_paths) {
    throw LimitError(
        "instance exceeds the exact oracle limits: " +
        std::to_string(candidates.size()) + " LSR candidates (max " +
        std::to_string(limits.max_lsr_candidates) + "), " +
        std::to_string(instance.demands.size()) + " demands (max " +
        std::to_string(limits.max_demands) + "), k_paths " +
        std::to_string(instance.policy.k_paths) + " (max " +
        std::to_string(limits.max_k_paths) + ")");
  }

  const auto deadline =
      time_limit_s > 0
          ? std::optional<Clock::time_point>(
                Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(time_limit_s)))
          : std::nullopt;
  auto check_deadline = [&deadline]() {
    if (deadline && Clock::now() > *deadline)
      throw LimitError("exact oracle exceeded its time limit");
  };

  const std::vector<LogicalEdgeInfo> all_logical = logical_edges_of(mlg);

  std::set<std::string> mandatory;
  for (const Demand& d : instance.demands)
    for (const std::string& t : demand_terminals(d)) mandatory.insert(t);
  std::vector<std::string> optional_candidates;
  for (const std::string& c : candidates)
    if (!mandatory.count(c)) optional_candidates.push_back(c);

  struct Best {
    Money cost = 0;
    std::string encoding;
    std::set<std::string> installed;
    std::vector<MulticastRoute> routes;
  };
  std::optional<Best> best;
  std::map<std::string, long> violation_counts;  // for the capacity certificate

  const std::size_t subset_count = std::size_t{1} << optional_candidates.size();
  for (std::size_t mask = 0; mask < subset_count; ++mask) {
    check_deadline();
    std::set<std::string> installed = mandatory;
    for (std::size_t bit = 0; bit < optional_candidates.size(); ++bit)
      if (mask & (std::size_t{1} << bit)) installed.insert(optional_candidates[bit]);

    // Per-demand Steiner tree enumeration over the installed subgraph.
    std::vector<std::vector<std::vector<std::string>>> demand_trees;
    bool subset_ok = true;
    for (const Demand& d : instance.demands) {
      auto trees = enumerate_steiner_trees(all_logical, installed, demand_terminals(d));
      if (trees.empty()) {
        subset_ok = false;
        break;
      }
      demand_trees.push_back(std::move(trees));
    }
    if (!subset_ok) continue;

    // Odometer over tree combinations.
    std::vector<std::size_t> tree_pick(instance.demands.size(), 0);
    while (true) {
      check_deadline();
      // Union of used edges, in id order, with candidate path counts.
      std::map<std::string, const Edge*> used;
      for (std::size_t di = 0; di < instance.demands.size(); ++di)
        for (const std::string& eid : demand_trees[di][tree_pick[di]])
          used.emplace(eid, &mlg.edge(eid));

      std::vector<std::string> used_ids;
      std::vector<int> path_counts;
      for (const auto& [eid, edge] : used) {
        used_ids.push_back(eid);
        path_counts.push_back(static_cast<int>(edge->candidate_paths.size()));
      }

      std::vector<int> path_pick(used_ids.size(), 0);
      while (true) {
        check_deadline();
        // Evaluate the combination.
        std::vector<MulticastRoute> routes;
        for (std::size_t di = 0; di < instance.demands.size(); ++di) {
          MulticastRoute r;
          r.demand_id = instance.demands[di].id;
          for (const std::string& eid : demand_trees[di][tree_pick[di]]) {
            r.logical_tree.insert(eid);
            const auto pos = std::lower_bound(used_ids.begin(), used_ids.end(), eid) -
                             used_ids.begin();
            r.path_choice[eid] = path_pick[pos];
          }
          routes.push_back(std::move(r));
        }
        LoadMap loads;
        for (std::size_t di = 0; di < routes.size(); ++di)
          loads += map_down(mlg, routes[di], instance.demands[di]);
        const auto dims = dimension_loads(instance, loads);
        const CapacityReport cap = check_capacity(instance, loads, dims);
        if (!cap.feasible()) {
          for (const CapacityViolation& v : cap.violations) ++violation_counts[v.element];
        } else {
          Money cost = 0;
          for (const std::string& vid : installed) cost += mlg.vertex(vid).node_cost;
          for (const auto& [link_id, modules] : dims) {
            const TransportLink* l = instance.find_link(link_id);
            cost += l->fixed_cost + static_cast<Money>(modules) * l->module_cost;
          }
          if (!best || cost <= best->cost) {
            Design probe;
            probe.routes = routes;
            probe.dimensioning = dims;
            for (const std::string& vid : installed)
              probe.selection.vertices.insert(vid);
            std::string encoding = design_encoding(probe);
            if (!best || cost < best->cost || encoding < best->encoding)
              best = Best{cost, std::move(encoding), installed, std::move(routes)};
          }
        }

        // Advance the path odometer.
        std::size_t pos = 0;
        while (pos < path_pick.size()) {
          if (++path_pick[pos] < path_counts[pos]) break;
          path_pick[pos] = 0;
          ++pos;
        }
        if (pos == path_pick.size()) break;
      }

      // Advance the tree odometer.
      std::size_t pos = 0;
      while (pos < tree_pick.size()) {
        if (++tree_pick[pos] < demand_trees[pos].size()) break;
        tree_pick[pos] = 0;
        ++pos;
      }
      if (pos == tree_pick.size()) break;
    }
  }

  if (best) {
    log::debug("exact oracle optimum " + std::to_string(best->cost));
    return assemble_design_with_installs(mlg, instance, std::move(best->routes),
                                         std::move(best->installed));
  }

  // No feasible design: certify why, best effort.
  for (const Demand& d : instance.demands) {
    const std::set<std::string> everything(candidates.begin(), candidates.end());
    auto trees = enumerate_steiner_trees(all_logical, everything, demand_terminals(d));
    bool any = false;
    for (const auto& tree : trees) {
      // Try every path assignment for the demand alone.
      std::vector<const Edge*> edges;
      for (const std::string& eid : tree) edges.push_back(&mlg.edge(eid));
      std::vector<int> pick(edges.size(), 0);
      while (true) {
        MulticastRoute r;
        r.demand_id = d.id;
        for (std::size_t i = 0; i < edges.size(); ++i) {
          r.logical_tree.insert(edges[i]->id);
          r.path_choice[edges[i]->id] = pick[i];
        }
        const LoadMap loads = map_down(mlg, r, d);
        if (check_capacity(instance, loads, dimension_loads(instance, loads)).feasible()) {
          any = true;
          break;
        }
        std::size_t pos = 0;
        while (pos < pick.size()) {
          if (++pick[pos] < static_cast<int>(edges[pos]->candidate_paths.size())) break;
          pick[pos] = 0;
          ++pos;
        }
        if (pos == pick.size() || pick.empty()) break;
      }
      if (any) break;
    }
    if (!any)
      return InfeasibilityCertificate{
          "demand", d.id, "no feasible routing exists in the candidate space"};
  }

  std::string worst;
  long worst_count = -1;
  for (const auto& [element, count] : violation_counts)
    if (count > worst_count) {
      worst = element;
      worst_count = count;
    }
  return InfeasibilityCertificate{
      "capacity", worst.empty() ? "(unknown)" : worst,
      "violated in every combination of the candidate space"};
}

SolveResult solve(const MultiLayerGraph& mlg, const Instance& instance,
                  const SolverConfig& cfg) {
  switch (cfg.mode) {
    case SolverMode::kGreedy:
      return greedy_construct(mlg, instance);
    case SolverMode::kGreedyPlusLocalSearch: {
      SolveResult seed = greedy_construct(mlg, instance);
      if (!feasible(seed)) return seed;
      return local_search(mlg, instance, std::get<Design>(seed),
                          cfg.local_search_budget, cfg.rng_seed);
    }
    case SolverMode::kExactBruteForce:
      return exact_bruteforce(mlg, instance, OracleLimits{}, cfg.time_limit_s);
  }
  throw InputError("unknown solver mode");
}

}  // namespace mlgd
