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

#include "mlgd/io.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mlgd/routing.hpp"
#include "mlgd/synthesis.hpp"

namespace mlgd {

namespace {

using json = nlohmann::ordered_json;

int line_of_offset(const std::string& bytes, std::size_t offset) {
  int line = 1;
  for (std::size_t i = 0; i < offset && i < bytes.size(); ++i)
    if (bytes[i] == '\n') ++line;
  return line;
}

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw InputError(path + ": " + message);
}

void reject_unknown(const json& obj, const std::string& path,
                    const std::set<std::string>& allowed) {
  for (const auto& [key, _] : obj.items())
    if (!allowed.count(key)) fail(path + "." + key, "unknown field");
}

const json& require(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing required field");
  return *it;
}

const json* optional_field(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

std::int64_t as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<std::int64_t>();
}

bool as_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) fail(path, "expected a boolean");
  return v.get<bool>();
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

bool valid_id(const std::string& id) {
  if (id.empty()) return false;
  for (char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
    if (!ok) return false;
  }
  return true;
}

std::string as_id(const json& v, const std::string& path) {
  const std::string s = as_string(v, path);
  if (!valid_id(s))
    fail(path, "ids must be non-empty and match [A-Za-z0-9_.-]+, got '" + s + "'");
  return s;
}

std::string format_pct(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", value);
  return buf;
}

}  // namespace

Instance parse_instance(const std::string& bytes) {
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw InputError("line " + std::to_string(line_of_offset(bytes, e.byte)) +
                     ": JSON syntax error");
  }
  if (!doc.is_object()) fail("$", "expected a JSON object");
  reject_unknown(doc, "$", {"meta", "nodes", "links", "demands", "policy", "solver"});

  Instance inst;

  const json& meta = require(doc, "$", "meta");
  if (!meta.is_object()) fail("$.meta", "expected an object");
  reject_unknown(meta, "$.meta", {"name", "version"});
  inst.name = as_id(require(meta, "$.meta", "name"), "$.meta.name");
  inst.version = static_cast<int>(as_int(require(meta, "$.meta", "version"), "$.meta.version"));
  if (inst.version != 1) fail("$.meta.version", "unsupported version (expected 1)");

  const json& nodes = require(doc, "$", "nodes");
  if (!nodes.is_array()) fail("$.nodes", "expected an array");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string path = "$.nodes[" + std::to_string(i) + "]";
    const json& n = nodes[i];
    if (!n.is_object()) fail(path, "expected an object");
    reject_unknown(n, path, {"id", "lsr_candidate", "lsr_install_cost", "throughput_limit"});
    TransportNode node;
    node.id = as_id(require(n, path, "id"), path + ".id");
    if (const json* v = optional_field(n, "lsr_candidate"))
      node.lsr_candidate = as_bool(*v, path + ".lsr_candidate");
    if (const json* v = optional_field(n, "lsr_install_cost"))
      node.lsr_install_cost = as_int(*v, path + ".lsr_install_cost");
    if (const json* v = optional_field(n, "throughput_limit"))
      node.throughput_limit = as_int(*v, path + ".throughput_limit");
    inst.nodes.push_back(std::move(node));
  }

  const json& links = require(doc, "$", "links");
  if (!links.is_array()) fail("$.links", "expected an array");
  for (std::size_t i = 0; i < links.size(); ++i) {
    const std::string path = "$.links[" + std::to_string(i) + "]";
    const json& l = links[i];
    if (!l.is_object()) fail(path, "expected an object");
    reject_unknown(l, path,
                   {"a", "b", "fixed_cost", "module_size", "module_cost", "max_modules"});
    TransportLink link;
    link.a = as_id(require(l, path, "a"), path + ".a");
    link.b = as_id(require(l, path, "b"), path + ".b");
    link.fixed_cost = as_int(require(l, path, "fixed_cost"), path + ".fixed_cost");
    link.module_size = as_int(require(l, path, "module_size"), path + ".module_size");
    link.module_cost = as_int(require(l, path, "module_cost"), path + ".module_cost");
    link.max_modules =
        static_cast<int>(as_int(require(l, path, "max_modules"), path + ".max_modules"));
    inst.links.push_back(std::move(link));
  }

  const json& demands = require(doc, "$", "demands");
  if (!demands.is_array()) fail("$.demands", "expected an array");
  for (std::size_t i = 0; i < demands.size(); ++i) {
    const std::string path = "$.demands[" + std::to_string(i) + "]";
    const json& d = demands[i];
    if (!d.is_object()) fail(path, "expected an object");
    reject_unknown(d, path, {"id", "source", "sinks", "bandwidth"});
    Demand demand;
    demand.id = as_id(require(d, path, "id"), path + ".id");
    demand.source = as_id(require(d, path, "source"), path + ".source");
    const json& sinks = require(d, path, "sinks");
    if (!sinks.is_array()) fail(path + ".sinks", "expected an array");
    for (std::size_t j = 0; j < sinks.size(); ++j)
      demand.sinks.push_back(
          as_id(sinks[j], path + ".sinks[" + std::to_string(j) + "]"));
    demand.bandwidth = as_int(require(d, path, "bandwidth"), path + ".bandwidth");
    inst.demands.push_back(std::move(demand));
  }

  const json& policy = require(doc, "$", "policy");
  if (!policy.is_object()) fail("$.policy", "expected an object");
  reject_unknown(policy, "$.policy",
                 {"k_paths", "logical_edge_rule", "hop_bound", "max_logical_degree"});
  inst.policy.k_paths =
      static_cast<int>(as_int(require(policy, "$.policy", "k_paths"), "$.policy.k_paths"));
  const std::string rule =
      as_string(require(policy, "$.policy", "logical_edge_rule"), "$.policy.logical_edge_rule");
  if (rule == "full_mesh") {
    inst.policy.rule = LogicalEdgeRule::kFullMesh;
    if (optional_field(policy, "hop_bound"))
      fail("$.policy.hop_bound", "only valid with the distance_limited rule");
  } else if (rule == "distance_limited") {
    inst.policy.rule = LogicalEdgeRule::kDistanceLimited;
    inst.policy.hop_bound =
        static_cast<int>(as_int(require(policy, "$.policy", "hop_bound"), "$.policy.hop_bound"));
  } else {
    fail("$.policy.logical_edge_rule", "expected 'full_mesh' or 'distance_limited'");
  }
  if (const json* v = optional_field(policy, "max_logical_degree"))
    inst.policy.max_logical_degree =
        static_cast<int>(as_int(*v, "$.policy.max_logical_degree"));

  if (const json* solver = optional_field(doc, "solver")) {
    if (!solver->is_object()) fail("$.solver", "expected an object");
    reject_unknown(*solver, "$.solver", {"mode", "seed", "budget", "time_limit"});
    if (const json* v = optional_field(*solver, "mode")) {
      const std::string mode = as_string(*v, "$.solver.mode");
      auto parsed = solver_mode_from_string(mode);
      if (!parsed) fail("$.solver.mode", "expected 'greedy', 'ls' or 'exact'");
      inst.solver.mode = *parsed;
    }
    if (const json* v = optional_field(*solver, "seed")) {
      const std::int64_t seed = as_int(*v, "$.solver.seed");
      if (seed < 0) fail("$.solver.seed", "must be >= 0");
      inst.solver.rng_seed = static_cast<std::uint64_t>(seed);
    }
    if (const json* v = optional_field(*solver, "budget")) {
      const std::int64_t budget = as_int(*v, "$.solver.budget");
      if (budget < 0) fail("$.solver.budget", "must be >= 0");
      inst.solver.local_search_budget = static_cast<int>(budget);
    }
    if (const json* v = optional_field(*solver, "time_limit")) {
      if (!v->is_number()) fail("$.solver.time_limit", "expected a number");
      inst.solver.time_limit_s = v->get<double>();
      if (inst.solver.time_limit_s < 0) fail("$.solver.time_limit", "must be >= 0");
    }
  }

  const auto problems = check_instance(inst);
  if (!problems.empty()) throw InputError("invalid instance: " + problems.front());
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  json doc;
  doc["meta"] = {{"name", inst.name}, {"version", inst.version}};
  doc["nodes"] = json::array();
  for (const TransportNode& n : inst.nodes) {
    json node;
    node["id"] = n.id;
    node["lsr_candidate"] = n.lsr_candidate;
    if (n.lsr_candidate) {
      node["lsr_install_cost"] = n.lsr_install_cost;
      if (n.throughput_limit) node["throughput_limit"] = *n.throughput_limit;
    }
    doc["nodes"].push_back(std::move(node));
  }
  doc["links"] = json::array();
  for (const TransportLink& l : inst.links) {
    doc["links"].push_back({{"a", l.a},
                            {"b", l.b},
                            {"fixed_cost", l.fixed_cost},
                            {"module_size", l.module_size},
                            {"module_cost", l.module_cost},
                            {"max_modules", l.max_modules}});
  }
  doc["demands"] = json::array();
  for (const Demand& d : inst.demands) {
    doc["demands"].push_back({{"id", d.id},
                              {"source", d.source},
                              {"sinks", d.sinks},
                              {"bandwidth", d.bandwidth}});
  }
  json policy;
  policy["k_paths"] = inst.policy.k_paths;
  policy["logical_edge_rule"] =
      inst.policy.rule == LogicalEdgeRule::kFullMesh ? "full_mesh" : "distance_limited";
  if (inst.policy.rule == LogicalEdgeRule::kDistanceLimited)
    policy["hop_bound"] = inst.policy.hop_bound;
  if (inst.policy.max_logical_degree)
    policy["max_logical_degree"] = *inst.policy.max_logical_degree;
  doc["policy"] = std::move(policy);
  doc["solver"] = {{"mode", to_string(inst.solver.mode)},
                   {"seed", inst.solver.rng_seed},
                   {"budget", inst.solver.local_search_budget},
                   {"time_limit", inst.solver.time_limit_s}};
  return doc.dump(2) + "\n";
}

std::optional<ReportFormat> report_format_from_string(const std::string& s) {
  if (s == "text") return ReportFormat::kText;
  if (s == "structured") return ReportFormat::kStructured;
  if (s == "dot") return ReportFormat::kDot;
  return std::nullopt;
}

DesignReport build_report(const MultiLayerGraph& mlg, const Instance& instance,
                          const SolveResult& result, const SolverConfig& cfg,
                          std::optional<double> optimality_gap_pct) {
  DesignReport report;
  report.instance_name = instance.name;
  report.instance_version = instance.version;
  report.mode = to_string(cfg.mode);
  report.seed = cfg.rng_seed;
  report.budget = cfg.local_search_budget;
  report.optimality_gap_pct = optimality_gap_pct;
  report.feasible = feasible(result);
  if (!report.feasible)
    report.certificate = std::get<InfeasibilityCertificate>(result);

  const Design* design = report.feasible ? &std::get<Design>(result) : nullptr;
  LoadMap loads;
  if (design != nullptr) loads = design_loads(mlg, instance, *design);

  for (const TransportNode& n : instance.nodes) report.transport_nodes.push_back(n.id);
  std::sort(report.transport_nodes.begin(), report.transport_nodes.end());

  // LSR candidates, sorted by node id.
  std::vector<const TransportNode*> candidates;
  for (const TransportNode& n : instance.nodes)
    if (n.lsr_candidate) candidates.push_back(&n);
  std::sort(candidates.begin(), candidates.end(),
            [](const TransportNode* x, const TransportNode* y) { return x->id < y->id; });
  for (const TransportNode* n : candidates) {
    ReportLsr lsr;
    lsr.node = n->id;
    lsr.install_cost = n->lsr_install_cost;
    lsr.throughput_limit = n->throughput_limit;
    const std::string vid = lsr_vertex_id(n->id);
    lsr.installed = design != nullptr && design->selection.vertices.count(vid) > 0;
    auto it = loads.lsr_throughput.find(vid);
    lsr.switched = it == loads.lsr_throughput.end() ? 0 : it->second;
    report.lsrs.push_back(std::move(lsr));
  }

  // Candidate logical edges, sorted by id.
  std::map<std::string, int> chosen_paths;
  if (design != nullptr)
    for (const MulticastRoute& r : design->routes)
      for (const auto& [eid, idx] : r.path_choice) chosen_paths[eid] = idx;
  for (const Edge& e : mlg.edges()) {
    if (e.kind != EdgeKind::kIntraLayer) continue;
    const Vertex* va = mlg.find_vertex(e.a);
    if (va == nullptr || va->layer != 1) continue;
    ReportLogicalEdge edge;
    edge.id = e.id;
    edge.node_a = node_of_lsr_vertex(std::min(e.a, e.b));
    edge.node_b = node_of_lsr_vertex(std::max(e.a, e.b));
    auto it = chosen_paths.find(e.id);
    if (it != chosen_paths.end()) {
      edge.chosen = true;
      edge.path_index = it->second;
      edge.path_nodes = e.candidate_paths.at(it->second).nodes;
      auto load_it = loads.logical_edge.find(e.id);
      edge.load = load_it == loads.logical_edge.end() ? 0 : load_it->second;
    }
    report.logical.push_back(std::move(edge));
  }
  std::sort(report.logical.begin(), report.logical.end(),
            [](const ReportLogicalEdge& x, const ReportLogicalEdge& y) {
              return x.id < y.id;
            });

  // Demand routes in demand order.
  for (const Demand& d : instance.demands) {
    ReportRoute route;
    route.demand = d.id;
    route.source = d.source;
    route.sinks = d.sinks;
    route.bandwidth = d.bandwidth;
    if (design != nullptr) {
      for (const MulticastRoute& r : design->routes)
        if (r.demand_id == d.id)
          route.tree.assign(r.logical_tree.begin(), r.logical_tree.end());
    }
    report.routes.push_back(std::move(route));
  }

  // Transport links, sorted by id.
  std::vector<const TransportLink*> links;
  for (const TransportLink& l : instance.links) links.push_back(&l);
  std::sort(links.begin(), links.end(),
            [](const TransportLink* x, const TransportLink* y) {
              return x->id() < y->id();
            });
  for (const TransportLink* l : links) {
    ReportLink link;
    link.id = l->id();
    link.node_a = std::min(l->a, l->b);
    link.node_b = std::max(l->a, l->b);
    link.module_size = l->module_size;
    link.max_modules = l->max_modules;
    link.fixed_cost = l->fixed_cost;
    link.module_cost = l->module_cost;
    auto load_it = loads.transport_link.find(link.id);
    link.load = load_it == loads.transport_link.end() ? 0 : load_it->second;
    if (design != nullptr) {
      auto dim_it = design->dimensioning.find(link.id);
      link.modules = dim_it == design->dimensioning.end() ? 0 : dim_it->second;
    }
    link.used = link.modules > 0;
    link.utilization_pct =
        link.modules > 0
            ? 100.0 * static_cast<double>(link.load) /
                  static_cast<double>(link.modules * l->module_size)
            : 0.0;
    report.links.push_back(std::move(link));
  }

  // Cost breakdown; the parts must sum to the total exactly.
  if (design != nullptr) {
    for (const ReportLsr& lsr : report.lsrs)
      if (lsr.installed) report.cost.equipment += lsr.install_cost;
    for (const ReportLink& link : report.links)
      if (link.used) {
        report.cost.transport_fixed += link.fixed_cost;
        report.cost.transport_modules +=
            static_cast<Money>(link.modules) * link.module_cost;
      }
    report.cost.total = design->cost;
    if (report.cost.equipment + report.cost.transport_fixed +
            report.cost.transport_modules !=
        report.cost.total)
      throw StructuralError("report cost breakdown does not sum to the total");
  }
  return report;
}

namespace {

std::string emit_text(const DesignReport& r) {
  std::ostringstream os;
  os << "mlg-design report\n";
  os << "instance: " << r.instance_name << " (version " << r.instance_version << ")\n";
  os << "solver: mode=" << r.mode << " seed=" << r.seed << " budget=" << r.budget
     << "\n";
  os << "status: " << (r.feasible ? "feasible" : "infeasible") << "\n";
  if (r.certificate)
    os << "certificate: " << r.certificate->kind << " " << r.certificate->element
       << " (" << r.certificate->detail << ")\n";
  if (r.optimality_gap_pct)
    os << "optimality gap: " << format_pct(*r.optimality_gap_pct) << "%\n";

  int installed = 0;
  for (const ReportLsr& l : r.lsrs) installed += l.installed ? 1 : 0;
  os << "\ninstalled LSRs (" << installed << "/" << r.lsrs.size() << "):\n";
  for (const ReportLsr& l : r.lsrs) {
    if (!l.installed) continue;
    os << "  " << l.node << "  install=" << l.install_cost
       << "  switched=" << l.switched;
    if (l.throughput_limit) os << "/" << *l.throughput_limit;
    os << "\n";
  }

  int chosen = 0;
  for (const ReportLogicalEdge& e : r.logical) chosen += e.chosen ? 1 : 0;
  os << "\nlogical topology (" << chosen << " chosen of " << r.logical.size()
     << " candidates):\n";
  for (const ReportLogicalEdge& e : r.logical) {
    if (!e.chosen) continue;
    os << "  " << e.id << "  " << e.node_a << "--" << e.node_b << "  via [";
    for (std::size_t i = 0; i < e.path_nodes.size(); ++i)
      os << (i ? "," : "") << e.path_nodes[i];
    os << "]  load=" << e.load << "\n";
  }

  os << "\ndemand routes:\n";
  for (const ReportRoute& route : r.routes) {
    os << "  " << route.demand << "  " << route.source << " -> {";
    for (std::size_t i = 0; i < route.sinks.size(); ++i)
      os << (i ? "," : "") << route.sinks[i];
    os << "}  bw=" << route.bandwidth << "  tree: ";
    if (route.tree.empty()) {
      os << "(none)";
    } else {
      for (std::size_t i = 0; i < route.tree.size(); ++i)
        os << (i ? ", " : "") << route.tree[i];
    }
    os << "\n";
  }

  int used = 0;
  for (const ReportLink& l : r.links) used += l.used ? 1 : 0;
  os << "\ntransport links (" << used << " used of " << r.links.size() << "):\n";
  for (const ReportLink& l : r.links) {
    if (!l.used) continue;
    os << "  " << l.id << "  load=" << l.load << "/" << (l.modules * l.module_size)
       << "  modules=" << l.modules << "/" << l.max_modules
       << "  util=" << format_pct(l.utilization_pct) << "%\n";
  }

  os << "\ncost: total=" << r.cost.total << "  equipment=" << r.cost.equipment
     << "  transport_fixed=" << r.cost.transport_fixed
     << "  transport_modules=" << r.cost.transport_modules << "\n";
  return os.str();
}

std::string emit_structured(const DesignReport& r) {
  json doc;
  doc["format"] = "mlg-design-report";
  doc["report_version"] = 1;
  doc["instance"] = {{"name", r.instance_name}, {"version", r.instance_version}};
  doc["solver"] = {{"mode", r.mode}, {"seed", r.seed}, {"budget", r.budget}};
  doc["feasible"] = r.feasible;
  if (r.certificate) {
    doc["certificate"] = {{"kind", r.certificate->kind},
                          {"element", r.certificate->element},
                          {"detail", r.certificate->detail}};
  } else {
    doc["certificate"] = nullptr;
  }
  if (r.optimality_gap_pct)
    doc["optimality_gap_pct"] = *r.optimality_gap_pct;
  else
    doc["optimality_gap_pct"] = nullptr;

  doc["transport_nodes"] = r.transport_nodes;
  doc["installed_lsrs"] = json::array();
  for (const ReportLsr& l : r.lsrs) {
    json e = {{"node", l.node},
              {"installed", l.installed},
              {"install_cost", l.install_cost},
              {"switched", l.switched}};
    if (l.throughput_limit) e["throughput_limit"] = *l.throughput_limit;
    doc["installed_lsrs"].push_back(std::move(e));
  }
  doc["logical_edges"] = json::array();
  for (const ReportLogicalEdge& e : r.logical) {
    json o = {{"id", e.id}, {"a", e.node_a}, {"b", e.node_b}, {"chosen", e.chosen}};
    if (e.chosen) {
      o["path_index"] = e.path_index;
      o["transport_path"] = e.path_nodes;
      o["load"] = e.load;
    }
    doc["logical_edges"].push_back(std::move(o));
  }
  doc["demand_routes"] = json::array();
  for (const ReportRoute& route : r.routes)
    doc["demand_routes"].push_back({{"demand", route.demand},
                                    {"source", route.source},
                                    {"sinks", route.sinks},
                                    {"bandwidth", route.bandwidth},
                                    {"tree", route.tree}});
  doc["links"] = json::array();
  for (const ReportLink& l : r.links)
    doc["links"].push_back({{"id", l.id},
                            {"a", l.node_a},
                            {"b", l.node_b},
                            {"used", l.used},
                            {"load", l.load},
                            {"modules", l.modules},
                            {"module_size", l.module_size},
                            {"max_modules", l.max_modules},
                            {"fixed_cost", l.fixed_cost},
                            {"module_cost", l.module_cost},
                            {"utilization_pct", l.utilization_pct}});
  doc["node_throughput"] = json::array();
  for (const ReportLsr& l : r.lsrs)
    doc["node_throughput"].push_back({{"node", l.node}, {"switched", l.switched}});
  doc["cost"] = {{"total", r.cost.total},
                 {"equipment", r.cost.equipment},
                 {"transport_fixed", r.cost.transport_fixed},
                 {"transport_modules", r.cost.transport_modules}};
  return doc.dump(2) + "\n";
}

// Two clusters: the transport topology and the logical overlay, with
// dashed inter-layer mapping edges (exactly one per LSR candidate).
std::string emit_dot(const DesignReport& r) {
  std::ostringstream os;
  os << "graph mlg_design {\n";
  os << "  rankdir=LR;\n";
  os << "  subgraph cluster_transport {\n";
  os << "    label=\"transport\";\n";
  for (const std::string& node : r.transport_nodes)
    os << "    \"" << node << "\" [shape=ellipse];\n";
  for (const ReportLink& l : r.links) {
    os << "    \"" << l.node_a << "\" -- \"" << l.node_b << "\"";
    if (l.used)
      os << " [penwidth=2, label=\"" << l.load << "/" << (l.modules * l.module_size)
         << "\"]";
    else
      os << " [color=gray]";
    os << ";\n";
  }
  os << "  }\n";
  os << "  subgraph cluster_logical {\n";
  os << "    label=\"mpls\";\n";
  for (const ReportLsr& l : r.lsrs) {
    os << "    \"lsr:" << l.node << "\" [shape=box";
    if (l.installed) os << ", style=filled, fillcolor=lightblue";
    os << "];\n";
  }
  for (const ReportLogicalEdge& e : r.logical) {
    os << "    \"lsr:" << e.node_a << "\" -- \"lsr:" << e.node_b << "\"";
    if (e.chosen)
      os << " [penwidth=2, label=\"" << e.load << "\"]";
    else
      os << " [style=dotted, color=gray]";
    os << ";\n";
  }
  os << "  }\n";
  for (const ReportLsr& l : r.lsrs)
    os << "  \"lsr:" << l.node << "\" -- \"" << l.node
       << "\" [style=dashed, color=gray];\n";
  os << "}\n";
  return os.str();
}

}  // namespace

std::string emit_report(const DesignReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kText: return emit_text(report);
    case ReportFormat::kStructured: return emit_structured(report);
    case ReportFormat::kDot: return emit_dot(report);
  }
  throw InputError("unknown report format");
}

DesignReport parse_report(const std::string& bytes) {
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw InputError("line " + std::to_string(line_of_offset(bytes, e.byte)) +
                     ": JSON syntax error");
  }
  if (!doc.is_object() || !doc.contains("format") ||
      doc["format"] != "mlg-design-report")
    throw InputError("not a mlg-design structured report");

  DesignReport r;
  r.instance_name = doc.at("instance").at("name").get<std::string>();
  r.instance_version = doc.at("instance").at("version").get<int>();
  r.mode = doc.at("solver").at("mode").get<std::string>();
  r.seed = doc.at("solver").at("seed").get<std::uint64_t>();
  r.budget = doc.at("solver").at("budget").get<int>();
  r.feasible = doc.at("feasible").get<bool>();
  if (!doc.at("certificate").is_null()) {
    const json& c = doc.at("certificate");
    r.certificate = InfeasibilityCertificate{c.at("kind").get<std::string>(),
                                             c.at("element").get<std::string>(),
                                             c.at("detail").get<std::string>()};
  }
  if (!doc.at("optimality_gap_pct").is_null())
    r.optimality_gap_pct = doc.at("optimality_gap_pct").get<double>();
  r.transport_nodes = doc.at("transport_nodes").get<std::vector<std::string>>();
  for (const json& e : doc.at("installed_lsrs")) {
    ReportLsr l;
    l.node = e.at("node").get<std::string>();
    l.installed = e.at("installed").get<bool>();
    l.install_cost = e.at("install_cost").get<Money>();
    l.switched = e.at("switched").get<Bandwidth>();
    if (e.contains("throughput_limit"))
      l.throughput_limit = e.at("throughput_limit").get<Bandwidth>();
    r.lsrs.push_back(std::move(l));
  }
  for (const json& e : doc.at("logical_edges")) {
    ReportLogicalEdge edge;
    edge.id = e.at("id").get<std::string>();
    edge.node_a = e.at("a").get<std::string>();
    edge.node_b = e.at("b").get<std::string>();
    edge.chosen = e.at("chosen").get<bool>();
    if (edge.chosen) {
      edge.path_index = e.at("path_index").get<int>();
      edge.path_nodes = e.at("transport_path").get<std::vector<std::string>>();
      edge.load = e.at("load").get<Bandwidth>();
    }
    r.logical.push_back(std::move(edge));
  }
  for (const json& e : doc.at("demand_routes")) {
    ReportRoute route;
    route.demand = e.at("demand").get<std::string>();
    route.source = e.at("source").get<std::string>();
    route.sinks = e.at("sinks").get<std::vector<std::string>>();
    route.bandwidth = e.at("bandwidth").get<Bandwidth>();
    route.tree = e.at("tree").get<std::vector<std::string>>();
    r.routes.push_back(std::move(route));
  }
  for (const json& e : doc.at("links")) {
    ReportLink l;
    l.id = e.at("id").get<std::string>();
    l.node_a = e.at("a").get<std::string>();
    l.node_b = e.at("b").get<std::string>();
    l.used = e.at("used").get<bool>();
    l.load = e.at("load").get<Bandwidth>();
    l.modules = e.at("modules").get<int>();
    l.module_size = e.at("module_size").get<Bandwidth>();
    l.max_modules = e.at("max_modules").get<int>();
    l.fixed_cost = e.at("fixed_cost").get<Money>();
    l.module_cost = e.at("module_cost").get<Money>();
    l.utilization_pct = e.at("utilization_pct").get<double>();
    r.links.push_back(std::move(l));
  }
  const json& cost = doc.at("cost");
  r.cost.total = cost.at("total").get<Money>();
  r.cost.equipment = cost.at("equipment").get<Money>();
  r.cost.transport_fixed = cost.at("transport_fixed").get<Money>();
  r.cost.transport_modules = cost.at("transport_modules").get<Money>();
  return r;
}

}  // namespace mlgd
