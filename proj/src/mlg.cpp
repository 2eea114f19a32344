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

#include "mlgd/mlg.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <tuple>
#include <utility>

namespace mlgd {

namespace {

std::pair<std::string, std::string> sorted_pair(const std::string& x,
                                                const std::string& y) {
  return x <= y ? std::make_pair(x, y) : std::make_pair(y, x);
}

}  // namespace

bool layers_adjacent(LayerId x, LayerId y) {
  const LayerId lo = std::min(x, y);
  const LayerId hi = std::max(x, y);
  return (lo == 0 && hi == 1) || (lo == 1 && hi >= 2);
}

const Vertex* MultiLayerGraph::find_vertex(const std::string& id) const {
  auto it = vertex_by_id_.find(id);
  return it == vertex_by_id_.end() ? nullptr : &vertices_[it->second];
}

const Edge* MultiLayerGraph::find_edge(const std::string& id) const {
  auto it = edge_by_id_.find(id);
  return it == edge_by_id_.end() ? nullptr : &edges_[it->second];
}

const Vertex& MultiLayerGraph::vertex(const std::string& id) const {
  if (const Vertex* v = find_vertex(id)) return *v;
  throw StructuralError("unknown vertex id: " + id);
}

const Edge& MultiLayerGraph::edge(const std::string& id) const {
  if (const Edge* e = find_edge(id)) return *e;
  throw StructuralError("unknown edge id: " + id);
}

const std::vector<std::size_t>& MultiLayerGraph::incident_edges(
    const std::string& vertex_id) const {
  auto it = vertex_by_id_.find(vertex_id);
  if (it == vertex_by_id_.end())
    throw StructuralError("unknown vertex id: " + vertex_id);
  return incident_[it->second];
}

const Vertex& MultiLayerGraph::other_endpoint(const Edge& e,
                                              const std::string& vertex_id) const {
  if (e.a == vertex_id) return vertex(e.b);
  if (e.b == vertex_id) return vertex(e.a);
  throw StructuralError("vertex " + vertex_id + " is not an endpoint of " + e.id);
}

std::string MultiLayerGraph::dump() const {
  std::ostringstream os;
  os << "layers " << layer_count_ << "\n";
  std::vector<const Vertex*> vs;
  vs.reserve(vertices_.size());
  for (const auto& v : vertices_) vs.push_back(&v);
  std::sort(vs.begin(), vs.end(),
            [](const Vertex* x, const Vertex* y) { return x->id < y->id; });
  for (const Vertex* v : vs) {
    os << "v " << v->id << " layer=" << v->layer << " kind="
       << (v->kind == VertexKind::kTransportNode ? "transport"
           : v->kind == VertexKind::kLsrCandidate ? "lsr" : "flow")
       << " cost=" << v->node_cost;
    if (v->throughput_limit) os << " tput=" << *v->throughput_limit;
    os << "\n";
  }
  std::vector<const Edge*> es;
  es.reserve(edges_.size());
  for (const auto& e : edges_) es.push_back(&e);
  std::sort(es.begin(), es.end(),
            [](const Edge* x, const Edge* y) { return x->id < y->id; });
  for (const Edge* e : es) {
    os << "e " << e->id << " " << e->a << "--" << e->b
       << (e->kind == EdgeKind::kIntraLayer ? " intra" : " inter")
       << " w=" << e->weight;
    if (e->capacity) os << " cap=" << *e->capacity;
    for (const auto& p : e->candidate_paths) {
      os << " path[";
      for (std::size_t i = 0; i < p.nodes.size(); ++i)
        os << (i ? "," : "") << p.nodes[i];
      os << "]";
    }
    os << "\n";
  }
  return os.str();
}

LayerId MlgBuilder::add_layer() { return g_.layer_count_++; }

MlgBuilder& MlgBuilder::add_vertex(Vertex v) {
  if (g_.vertex_by_id_.count(v.id))
    throw InputError("duplicate vertex id: " + v.id);
  g_.vertex_by_id_[v.id] = g_.vertices_.size();
  g_.vertices_.push_back(std::move(v));
  g_.incident_.emplace_back();
  return *this;
}

MlgBuilder& MlgBuilder::add_edge(Edge e) {
  if (g_.edge_by_id_.count(e.id)) throw InputError("duplicate edge id: " + e.id);
  auto a = g_.vertex_by_id_.find(e.a);
  auto b = g_.vertex_by_id_.find(e.b);
  if (a == g_.vertex_by_id_.end() || b == g_.vertex_by_id_.end())
    throw InputError("edge " + e.id + " references an unknown vertex");
  const std::size_t idx = g_.edges_.size();
  g_.edge_by_id_[e.id] = idx;
  g_.incident_[a->second].push_back(idx);
  if (b->second != a->second) g_.incident_[b->second].push_back(idx);
  g_.edges_.push_back(std::move(e));
  return *this;
}

MultiLayerGraph MlgBuilder::build() { return std::move(g_); }

ValidationReport validate(const MultiLayerGraph& mlg) {
  ValidationReport report;
  auto flag = [&report](const std::string& element, const std::string& message) {
    report.violations.push_back({element, message});
  };

  if (mlg.layer_count() == 0) {
    flag("layer:0", "missing layer 0");
    return report;  // nothing else is meaningful for a layerless graph
  }
  if (mlg.layer_count() == 1) flag("layer:1", "missing layer 1");

  for (const Vertex& v : mlg.vertices()) {
    if (v.layer < 0 || v.layer >= mlg.layer_count())
      flag(v.id, "vertex on unknown layer");
    if (v.kind == VertexKind::kLsrCandidate && v.layer != 1)
      flag(v.id, "LSR candidate outside layer 1");
    if (v.kind == VertexKind::kFlowEndpoint && v.layer < 2)
      flag(v.id, "flow endpoint below layer 2");
    if (v.kind == VertexKind::kTransportNode && v.layer != 0)
      flag(v.id, "transport node outside layer 0");
    if (v.node_cost < 0) flag(v.id, "negative node cost");
    if (v.throughput_limit && *v.throughput_limit < 0)
      flag(v.id, "negative throughput limit");
  }

  std::map<std::pair<std::string, std::string>, std::string> intra_seen;
  for (const Edge& e : mlg.edges()) {
    const Vertex* a = mlg.find_vertex(e.a);
    const Vertex* b = mlg.find_vertex(e.b);
    if (a == nullptr || b == nullptr) {
      flag(e.id, "edge references an unknown vertex");
      continue;
    }
    if (e.a == e.b) flag(e.id, "self-loop");
    if (e.weight < 0) flag(e.id, "negative weight");
    if (e.capacity && *e.capacity < 0) flag(e.id, "negative capacity");
    if (e.kind == EdgeKind::kIntraLayer) {
      if (a->layer != b->layer) {
        flag(e.id, "intra-layer edge spans layers");
      } else {
        auto key = sorted_pair(e.a, e.b);
        auto [it, inserted] = intra_seen.emplace(key, e.id);
        if (!inserted) flag(e.id, "parallel intra-layer edge (duplicate of " + it->second + ")");
      }
    } else {
      if (!layers_adjacent(a->layer, b->layer))
        flag(e.id, "inter-layer edge joins non-adjacent layers");
      if (e.capacity)
        flag(e.id, "inter-layer edge carries a capacity");
    }
  }

  // Every layer-1 vertex maps to exactly one transport node.
  for (const Vertex& v : mlg.vertices()) {
    if (v.layer != 1) continue;
    int down = 0;
    for (std::size_t idx : mlg.incident_edges(v.id)) {
      const Edge& e = mlg.edges()[idx];
      if (e.kind != EdgeKind::kInterLayer) continue;
      const Vertex& other = mlg.other_endpoint(e, v.id);
      if (other.layer == 0) ++down;
    }
    if (down != 1)
      flag(v.id, "layer-1 vertex must map to exactly one transport node");
  }

  // Layer-0 intra-layer connectivity.
  {
    std::vector<const Vertex*> l0;
    for (const Vertex& v : mlg.vertices())
      if (v.layer == 0) l0.push_back(&v);
    if (!l0.empty()) {
      std::sort(l0.begin(), l0.end(),
                [](const Vertex* x, const Vertex* y) { return x->id < y->id; });
      std::set<std::string> reached;
      std::deque<std::string> queue{l0.front()->id};
      reached.insert(l0.front()->id);
      while (!queue.empty()) {
        const std::string cur = queue.front();
        queue.pop_front();
        for (std::size_t idx : mlg.incident_edges(cur)) {
          const Edge& e = mlg.edges()[idx];
          if (e.kind != EdgeKind::kIntraLayer) continue;
          const Vertex& other = mlg.other_endpoint(e, cur);
          if (other.layer != 0) continue;
          if (reached.insert(other.id).second) queue.push_back(other.id);
        }
      }
      for (const Vertex* v : l0)
        if (!reached.count(v->id)) {
          flag(v->id, "layer 0 disconnected");
          break;  // one representative is enough
        }
    }
  }

  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& x, const Violation& y) {
              return std::tie(x.element, x.message) < std::tie(y.element, y.message);
            });
  return report;
}

std::vector<Violation> validate_selection(const MultiLayerGraph& mlg,
                                          const Selection& sel) {
  std::vector<Violation> out;
  for (const auto& vid : sel.vertices)
    if (mlg.find_vertex(vid) == nullptr) out.push_back({vid, "unknown vertex"});
  for (const auto& eid : sel.edges) {
    const Edge* e = mlg.find_edge(eid);
    if (e == nullptr) {
      out.push_back({eid, "unknown edge"});
      continue;
    }
    if (!sel.vertices.count(e->a) || !sel.vertices.count(e->b))
      out.push_back({eid, "chosen edge with unchosen endpoint"});
  }
  std::sort(out.begin(), out.end(), [](const Violation& x, const Violation& y) {
    return std::tie(x.element, x.message) < std::tie(y.element, y.message);
  });
  return out;
}

LayerView layer_subgraph(const MultiLayerGraph& mlg, LayerId layer) {
  if (layer < 0 || layer >= mlg.layer_count())
    throw InputError("no such layer: " + std::to_string(layer));
  LayerView view;
  view.layer = layer;
  for (const Vertex& v : mlg.vertices())
    if (v.layer == layer) view.vertices.push_back(&v);
  for (const Edge& e : mlg.edges()) {
    if (e.kind != EdgeKind::kIntraLayer) continue;
    const Vertex* a = mlg.find_vertex(e.a);
    const Vertex* b = mlg.find_vertex(e.b);
    if (a && b && a->layer == layer && b->layer == layer) view.edges.push_back(&e);
  }
  std::sort(view.vertices.begin(), view.vertices.end(),
            [](const Vertex* x, const Vertex* y) { return x->id < y->id; });
  std::sort(view.edges.begin(), view.edges.end(),
            [](const Edge* x, const Edge* y) { return x->id < y->id; });
  return view;
}

Money total_weight(const MultiLayerGraph& mlg, const Selection& sel) {
  Money sum = 0;
  for (const auto& vid : sel.vertices) sum += mlg.vertex(vid).node_cost;
  for (const auto& eid : sel.edges) sum += mlg.edge(eid).weight;
  return sum;
}

const Vertex& descend(const MultiLayerGraph& mlg, const std::string& vertex_id) {
  const Vertex& v = mlg.vertex(vertex_id);
  if (v.layer < 1)
    throw InputError("descend requires a vertex above layer 0: " + vertex_id);
  const Vertex* below = nullptr;
  int count = 0;
  for (std::size_t idx : mlg.incident_edges(vertex_id)) {
    const Edge& e = mlg.edges()[idx];
    if (e.kind != EdgeKind::kInterLayer) continue;
    const Vertex& other = mlg.other_endpoint(e, vertex_id);
    if (other.layer < v.layer) {
      below = &other;
      ++count;
    }
  }
  if (count != 1 || below == nullptr)
    throw StructuralError("vertex " + vertex_id + " has " + std::to_string(count) +
                          " downward inter-layer edges, expected exactly 1");
  return *below;
}

}  // namespace mlgd
