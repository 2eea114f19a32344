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
// Searches for the minimum-cost design: which LSRs to install, which
// logical edges to use with which transport path, one multicast tree per
// demand, and modular link dimensioning. Three modes: greedy
// construction, greedy + local search, and an exact brute-force oracle
// for desk-scale validation.

#ifndef MLGD_OPTIMIZER_HPP_
#define MLGD_OPTIMIZER_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "mlgd/instance.hpp"
#include "mlgd/mlg.hpp"
#include "mlgd/routing.hpp"
#include "mlgd/types.hpp"

namespace mlgd {

struct SolverConfig {
  SolverMode mode = SolverMode::kGreedyPlusLocalSearch;
  int local_search_budget = 200;
  std::uint64_t rng_seed = 0;
  double time_limit_s = 0;  // exact mode only; 0 = unlimited

  static SolverConfig from_defaults(const SolverDefaults& d) {
    return SolverConfig{d.mode, d.local_search_budget, d.rng_seed, d.time_limit_s};
  }
};

// Enforced input bounds of the exact oracle.
struct OracleLimits {
  int max_lsr_candidates = 10;
  int max_demands = 4;
  int max_k_paths = 3;
};

struct Design {
  Selection selection;                   // closed under incidence
  std::vector<MulticastRoute> routes;    // one per demand, in demand order
  std::map<std::string, int> dimensioning;  // transport edge id -> modules (>=1)
  Money cost = 0;
  bool operator==(const Design&) const = default;
};

struct InfeasibilityCertificate {
  std::string kind;     // "demand" | "capacity"
  std::string element;  // demand id or element id
  std::string detail;
  bool operator==(const InfeasibilityCertificate&) const = default;
};

using SolveResult = std::variant<Design, InfeasibilityCertificate>;

inline bool feasible(const SolveResult& r) { return std::holds_alternative<Design>(r); }

// Installed LSR costs plus, per used transport link, fixed cost and
// module cost x module count. Throws StructuralError when the design does
// not fit the graph/instance (missing routes, unknown edges, path-choice
// disagreement, non-tree routes, broken selection closure).
Money objective(const MultiLayerGraph& mlg, const Instance& instance,
                const Design& design);

// Canonical cost-free encoding of the structural decision variables;
// used for tie-breaking and for scale-equivariance checks.
std::string design_encoding(const Design& design);

// Aggregated loads of all routes (sum of map_down deltas).
LoadMap design_loads(const MultiLayerGraph& mlg, const Instance& instance,
                     const Design& design);

// Builds the incidence-closed selection, dimensioning and cost for the
// given routes. Used by every solver mode so designs are uniform.
// `installed` may list layer-1 vertices beyond those the routes touch
// (kept installed, charged by the objective).
Design assemble_design_with_installs(const MultiLayerGraph& mlg,
                                     const Instance& instance,
                                     std::vector<MulticastRoute> routes,
                                     std::set<std::string> installed);

Design assemble_design(const MultiLayerGraph& mlg, const Instance& instance,
                       std::vector<MulticastRoute> routes);

SolveResult greedy_construct(const MultiLayerGraph& mlg, const Instance& instance);

// Strict-improvement local search over three moves: (a) toggle an LSR
// install and reroute affected demands, (b) switch a logical edge's path
// choice, (c) re-root one demand's tree. Cost never increases; stops at
// the budget (counted in evaluated candidate moves) or at a local
// optimum. Deterministic for a fixed rng_seed.
Design local_search(const MultiLayerGraph& mlg, const Instance& instance,
                    const Design& seed_design, int budget, std::uint64_t rng_seed);

// Global minimum over LSR subsets x per-demand Steiner trees x path
// choices, minimally dimensioned; ties broken by lexicographic design
// encoding. Throws LimitError when the instance exceeds `limits` or the
// time limit.
SolveResult exact_bruteforce(const MultiLayerGraph& mlg, const Instance& instance,
                             const OracleLimits& limits = {},
                             double time_limit_s = 0);

SolveResult solve(const MultiLayerGraph& mlg, const Instance& instance,
                  const SolverConfig& cfg);

}  // namespace mlgd

#endif  // MLGD_OPTIMIZER_HPP_
