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

#include "mlgd/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mlgd/io.hpp"
#include "mlgd/log.hpp"
#include "mlgd/optimizer.hpp"
#include "mlgd/synthesis.hpp"

namespace mlgd {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& bytes, const std::string& out_path,
                  std::ostream& out) {
  if (out_path.empty()) {
    out << bytes;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw InputError("cannot write file: " + out_path);
  file << bytes;
}

int run_validate(const std::string& path, std::ostream& out) {
  const Instance inst = parse_instance(read_file(path));
  out << "OK: " << inst.name << ": " << inst.nodes.size() << " nodes, "
      << inst.links.size() << " links, " << inst.demands.size() << " demands\n";
  return kExitOk;
}

int run_synth(const std::string& path, std::ostream& out) {
  const Instance inst = parse_instance(read_file(path));
  const MultiLayerGraph mlg = synthesize(inst);

  int transport = 0, lsr = 0, flow = 0;
  for (const Vertex& v : mlg.vertices()) {
    if (v.kind == VertexKind::kTransportNode) ++transport;
    if (v.kind == VertexKind::kLsrCandidate) ++lsr;
    if (v.kind == VertexKind::kFlowEndpoint) ++flow;
  }
  int transport_edges = 0, logical = 0, flow_edges = 0, inter = 0;
  std::size_t paths = 0;
  for (const Edge& e : mlg.edges()) {
    if (e.kind == EdgeKind::kInterLayer) {
      ++inter;
      continue;
    }
    const Vertex& a = mlg.vertex(e.a);
    if (a.layer == 0) ++transport_edges;
    if (a.layer == 1) ++logical;
    if (a.layer >= 2) ++flow_edges;
    paths += e.candidate_paths.size();
  }
  const ValidationReport report = validate(mlg);

  out << "instance: " << inst.name << "\n";
  out << "layers: " << mlg.layer_count() << "\n";
  out << "vertices: " << mlg.vertices().size() << " (" << transport << " transport, "
      << lsr << " LSR candidates, " << flow << " flow endpoints)\n";
  out << "edges: " << mlg.edges().size() << " (" << transport_edges << " transport, "
      << logical << " logical, " << flow_edges << " flow, " << inter
      << " inter-layer)\n";
  out << "candidate transport paths: " << paths << "\n";
  out << "validation: " << (report.valid() ? "OK" : "INVALID") << "\n";
  for (const Violation& v : report.violations)
    out << "  violation: " << v.element << ": " << v.message << "\n";
  return report.valid() ? kExitOk : kExitInputError;
}

int run_solve(const std::string& path, const std::optional<std::string>& mode_flag,
              const std::optional<std::uint64_t>& seed_flag,
              const std::optional<int>& budget_flag, const std::string& out_path,
              const std::string& format_name, std::ostream& out, std::ostream& err) {
  const Instance inst = parse_instance(read_file(path));
  SolverConfig cfg = SolverConfig::from_defaults(inst.solver);
  if (mode_flag) {
    auto parsed = solver_mode_from_string(*mode_flag);
    if (!parsed) throw InputError("unknown mode: " + *mode_flag);
    cfg.mode = *parsed;
  }
  if (seed_flag) cfg.rng_seed = *seed_flag;
  if (budget_flag) cfg.local_search_budget = *budget_flag;
  auto format = report_format_from_string(format_name);
  if (!format) throw InputError("unknown format: " + format_name);

  const MultiLayerGraph mlg = synthesize(inst);
  log::info("solving " + inst.name + " with mode " + to_string(cfg.mode));
  const SolveResult result = solve(mlg, inst, cfg);

  std::optional<double> gap;
  if (cfg.mode == SolverMode::kExactBruteForce && feasible(result)) gap = 0.0;
  const DesignReport report = build_report(mlg, inst, result, cfg, gap);
  write_output(emit_report(report, *format), out_path, out);

  if (!feasible(result)) {
    const auto& cert = std::get<InfeasibilityCertificate>(result);
    err << "infeasible: " << cert.kind << " " << cert.element << ": " << cert.detail
        << "\n";
    return kExitInfeasible;
  }
  return kExitOk;
}

int run_compare(const std::string& path, std::ostream& out, std::ostream& err) {
  const Instance inst = parse_instance(read_file(path));
  const MultiLayerGraph mlg = synthesize(inst);

  SolverConfig cfg = SolverConfig::from_defaults(inst.solver);
  cfg.mode = SolverMode::kExactBruteForce;
  const SolveResult exact = exact_bruteforce(mlg, inst, OracleLimits{}, cfg.time_limit_s);
  const SolveResult greedy = greedy_construct(mlg, inst);
  SolveResult ls = greedy;
  if (feasible(greedy))
    ls = local_search(mlg, inst, std::get<Design>(greedy), cfg.local_search_budget,
                      cfg.rng_seed);

  if (!feasible(exact)) {
    const auto& cert = std::get<InfeasibilityCertificate>(exact);
    err << "infeasible: " << cert.kind << " " << cert.element << ": " << cert.detail
        << "\n";
    return kExitInfeasible;
  }

  const Money exact_cost = std::get<Design>(exact).cost;
  auto gap_of = [exact_cost](Money cost) {
    if (exact_cost == 0) return cost == 0 ? 0.0 : 100.0;
    return 100.0 * static_cast<double>(cost - exact_cost) /
           static_cast<double>(exact_cost);
  };
  auto row = [&](const std::string& name, const SolveResult& r) {
    out << name << "\t";
    if (!feasible(r)) {
      out << "infeasible\t-\n";
      return;
    }
    const Money cost = std::get<Design>(r).cost;
    char gap[32];
    std::snprintf(gap, sizeof(gap), "%.2f", gap_of(cost));
    out << cost << "\t" << gap << "%\n";
  };
  out << "mode\tcost\tgap\n";
  row("greedy", greedy);
  row("ls", ls);
  row("exact", exact);
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Two-level MPLS-over-transport network design"};
  app.name("mlg-design");
  app.require_subcommand(1);

  std::string file;
  auto* validate_cmd = app.add_subcommand("validate", "Check an instance file");
  validate_cmd->add_option("file", file, "instance file")->required();

  auto* synth_cmd =
      app.add_subcommand("synth", "Build the redundant multilayer graph and print stats");
  synth_cmd->add_option("file", file, "instance file")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Search for a minimum-cost design");
  std::string mode_flag;
  std::uint64_t seed_flag = 0;
  int budget_flag = 0;
  std::string out_path;
  std::string format_name = "text";
  solve_cmd->add_option("file", file, "instance file")->required();
  auto* mode_opt =
      solve_cmd->add_option("--mode", mode_flag, "greedy | ls | exact");
  auto* seed_opt = solve_cmd->add_option("--seed", seed_flag, "RNG seed");
  auto* budget_opt =
      solve_cmd->add_option("--budget", budget_flag, "local search budget");
  solve_cmd->add_option("--out", out_path, "write the report to a file");
  solve_cmd->add_option("--format", format_name, "text | structured | dot");

  auto* compare_cmd =
      app.add_subcommand("compare", "Run all modes and print the gap table");
  compare_cmd->add_option("file", file, "instance file")->required();

  std::vector<std::string> argv_storage{"mlg-design"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_storage.size());
  for (const std::string& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (app.got_subcommand(validate_cmd)) return run_validate(file, out);
    if (app.got_subcommand(synth_cmd)) return run_synth(file, out);
    if (app.got_subcommand(solve_cmd)) {
      return run_solve(file,
                       mode_opt->count() ? std::optional<std::string>(mode_flag)
                                         : std::nullopt,
                       seed_opt->count() ? std::optional<std::uint64_t>(seed_flag)
                                         : std::nullopt,
                       budget_opt->count() ? std::optional<int>(budget_flag)
                                           : std::nullopt,
                       out_path, format_name, out, err);
    }
    if (app.got_subcommand(compare_cmd)) return run_compare(file, out, err);
    err << "error: no subcommand\n";
    return kExitInputError;
  } catch (const LimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitLimitExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace mlgd
