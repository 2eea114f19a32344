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

#ifndef MLGD_INSTANCE_HPP_
#define MLGD_INSTANCE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mlgd/types.hpp"

namespace mlgd {

struct TransportNode {
  std::string id;
  bool lsr_candidate = false;
  Money lsr_install_cost = 0;                 // candidates only
  std::optional<Bandwidth> throughput_limit;  // candidates only; nullopt = unbounded
  bool operator==(const TransportNode&) const = default;
};

// Link capacity is modular: up to max_modules modules of module_size
// bandwidth units each, module_cost per module, fixed_cost once when used.
struct TransportLink {
  std::string a;
  std::string b;
  Money fixed_cost = 0;
  Bandwidth module_size = 1;
  Money module_cost = 0;
  int max_modules = 1;

  std::string id() const;  // "t:<min>-<max>" over sorted endpoints
  Bandwidth max_capacity() const { return module_size * max_modules; }
  bool operator==(const TransportLink&) const = default;
};

// A multicast flow: bandwidth from one source to a set of sinks.
struct Demand {
  std::string id;
  std::string source;
  std::vector<std::string> sinks;
  Bandwidth bandwidth = 0;
  bool operator==(const Demand&) const = default;
};

enum class LogicalEdgeRule { kFullMesh, kDistanceLimited };

// Bounds the redundancy of the synthesized candidate graph.
struct CandidatePolicy {
  int k_paths = 1;  // candidate transport paths per logical edge
  std::optional<int> max_logical_degree;  // nullopt = unbounded
  LogicalEdgeRule rule = LogicalEdgeRule::kFullMesh;
  int hop_bound = 0;  // DistanceLimited only
  bool operator==(const CandidatePolicy&) const = default;
};

enum class SolverMode { kGreedy, kGreedyPlusLocalSearch, kExactBruteForce };

std::string to_string(SolverMode mode);                 // greedy | ls | exact
std::optional<SolverMode> solver_mode_from_string(const std::string& s);

struct SolverDefaults {
  SolverMode mode = SolverMode::kGreedyPlusLocalSearch;
  std::uint64_t rng_seed = 0;
  int local_search_budget = 200;
  double time_limit_s = 0;  // 0 = unlimited
  bool operator==(const SolverDefaults&) const = default;
};

struct Instance {
  std::string name;
  int version = 1;
  std::vector<TransportNode> nodes;
  std::vector<TransportLink> links;
  std::vector<Demand> demands;
  CandidatePolicy policy;
  SolverDefaults solver;

  const TransportNode* find_node(const std::string& id) const;
  const TransportLink* find_link(const std::string& link_id) const;
  const Demand* find_demand(const std::string& id) const;
  bool operator==(const Instance&) const = default;
};

// All instance invariant problems, human-readable, deterministic order;
// empty means the instance is valid. parse_instance reports the first of
// these with its location, synthesize refuses on any.
std::vector<std::string> check_instance(const Instance& instance);

}  // namespace mlgd

#endif  // MLGD_INSTANCE_HPP_
