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
// Versioned JSON instance files, design reports (text, structured JSON,
// DOT) and their parsers. Unknown fields are rejected; serialization is
// canonical so identical inputs give byte-identical outputs.

#ifndef MLGD_IO_HPP_
#define MLGD_IO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mlgd/instance.hpp"
#include "mlgd/mlg.hpp"
#include "mlgd/optimizer.hpp"

namespace mlgd {

// Parses an instance document. Throws InputError carrying the first
// problem with its line (syntax) or field path (schema/invariant).
Instance parse_instance(const std::string& bytes);

// Canonical form; parse(serialize(parse(x))) == parse(x) and
// serialize is idempotent after the first normalization.
std::string serialize_instance(const Instance& instance);

enum class ReportFormat { kText, kStructured, kDot };
std::optional<ReportFormat> report_format_from_string(const std::string& s);

// Self-contained report data, enough for all three output formats.
struct ReportLsr {
  std::string node;
  bool installed = false;
  Money install_cost = 0;
  Bandwidth switched = 0;
  std::optional<Bandwidth> throughput_limit;
};

struct ReportLogicalEdge {
  std::string id;
  std::string node_a;
  std::string node_b;
  bool chosen = false;
  int path_index = -1;                  // chosen edges only
  std::vector<std::string> path_nodes;  // chosen edges only
  Bandwidth load = 0;
};

struct ReportRoute {
  std::string demand;
  std::string source;
  std::vector<std::string> sinks;
  Bandwidth bandwidth = 0;
  std::vector<std::string> tree;  // logical edge ids, sorted
};

struct ReportLink {
  std::string id;
  std::string node_a;
  std::string node_b;
  bool used = false;
  Bandwidth load = 0;
  int modules = 0;
  Bandwidth module_size = 1;
  int max_modules = 1;
  Money fixed_cost = 0;
  Money module_cost = 0;
  double utilization_pct = 0;  // load / (modules * module_size) * 100
};

struct ReportCost {
  Money total = 0;
  Money equipment = 0;          // LSR installs
  Money transport_fixed = 0;    // fixed costs of used links
  Money transport_modules = 0;  // module costs of used links
};

struct DesignReport {
  std::string instance_name;
  int instance_version = 1;
  std::string mode;
  std::uint64_t seed = 0;
  int budget = 0;
  bool feasible = false;
  std::optional<InfeasibilityCertificate> certificate;
  std::vector<std::string> transport_nodes;  // every transport node, sorted
  std::vector<ReportLsr> lsrs;             // every LSR candidate
  std::vector<ReportLogicalEdge> logical;  // every candidate logical edge
  std::vector<ReportRoute> routes;
  std::vector<ReportLink> links;  // every transport link
  ReportCost cost;
  std::optional<double> optimality_gap_pct;  // present when the oracle ran
};

// Assembles the report for a solve outcome. The design must belong to
// (mlg, instance).
DesignReport build_report(const MultiLayerGraph& mlg, const Instance& instance,
                          const SolveResult& result, const SolverConfig& cfg,
                          std::optional<double> optimality_gap_pct = std::nullopt);

std::string emit_report(const DesignReport& report, ReportFormat format);

// Reads a structured report back; emit_report(parse_report(b),
// kStructured) == b for reports produced by emit_report.
DesignReport parse_report(const std::string& bytes);

}  // namespace mlgd

#endif  // MLGD_IO_HPP_
