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

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "mlgd/cli.hpp"
#include "mlgd/optimizer.hpp"
#include "mlgd/synthesis.hpp"

using namespace mlgd;

namespace {

std::string fixture_path(const std::string& name) {
  return std::string(MLGD_FIXTURE_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int count_occurrences(const std::string& haystack, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size()))
    ++n;
  return n;
}

const char* kMinimal = R"({
  "meta": {"name": "mini", "version": 1},
  "nodes": [
    {"id": "A", "lsr_candidate": true, "lsr_install_cost": 1},
    {"id": "B", "lsr_candidate": false}
  ],
  "links": [
    {"a": "A", "b": "B", "fixed_cost": 1, "module_size": 4, "module_cost": 1, "max_modules": 2}
  ],
  "demands": [],
  "policy": {"k_paths": 1, "logical_edge_rule": "full_mesh"}
})";

}  // namespace

TEST_CASE("parse_instance: minimal valid file") {
  const Instance inst = parse_instance(kMinimal);
  CHECK(inst.name == "mini");
  CHECK(inst.nodes.size() == 2);
  CHECK(inst.links.size() == 1);
  CHECK(inst.demands.empty());
  CHECK(inst.solver.mode == SolverMode::kGreedyPlusLocalSearch);  // default
}

TEST_CASE("parse_instance: diagnostics carry a line or field location") {
  CHECK_THROWS_WITH_AS(parse_instance("{\n  \"meta\": oops\n}"),
                       doctest::Contains("line 2"), InputError);

  std::string unknown = kMinimal;
  unknown.replace(unknown.find("\"lsr_candidate\""), 15, "\"lsr_candidat3\"");
  CHECK_THROWS_WITH_AS(parse_instance(unknown),
                       doctest::Contains("$.nodes[0].lsr_candidat3"), InputError);

  std::string noversion = kMinimal;
  noversion.replace(noversion.find(", \"version\": 1"), 14, "");
  CHECK_THROWS_WITH_AS(parse_instance(noversion),
                       doctest::Contains("$.meta.version"), InputError);
}

TEST_CASE("parse_instance: demand with source equal to sink names the demand") {
  std::string doc = R"({
    "meta": {"name": "bad", "version": 1},
    "nodes": [
      {"id": "A", "lsr_candidate": true, "lsr_install_cost": 1},
      {"id": "B", "lsr_candidate": true, "lsr_install_cost": 1}
    ],
    "links": [
      {"a": "A", "b": "B", "fixed_cost": 1, "module_size": 4, "module_cost": 1, "max_modules": 2}
    ],
    "demands": [{"id": "d9", "source": "A", "sinks": ["A"], "bandwidth": 1}],
    "policy": {"k_paths": 1, "logical_edge_rule": "full_mesh"}
  })";
  CHECK_THROWS_WITH_AS(parse_instance(doc), doctest::Contains("d9"), InputError);
}

TEST_CASE("parse_instance: schema oddities are rejected") {
  std::string bad_id = kMinimal;
  bad_id.replace(bad_id.find("\"A\""), 3, "\"A:B\"");  // ':' not allowed in ids
  CHECK_THROWS_AS(parse_instance(bad_id), InputError);

  std::string bad_mode = kMinimal;
  bad_mode.insert(bad_mode.rfind('}'), R"(, "solver": {"mode": "annealing"})");
  CHECK_THROWS_WITH_AS(parse_instance(bad_mode), doctest::Contains("$.solver.mode"),
                       InputError);

  std::string hop_without_rule = kMinimal;
  hop_without_rule.replace(hop_without_rule.find("\"k_paths\": 1"), 12,
                           "\"k_paths\": 1, \"hop_bound\": 2");
  CHECK_THROWS_WITH_AS(parse_instance(hop_without_rule),
                       doctest::Contains("hop_bound"), InputError);
}

TEST_CASE("round-trip: parse-serialize-parse is the identity on all fixtures") {
  for (const char* name : {"i1_ring.json", "i2_contention.json", "i3_cut.json"}) {
    const std::string bytes = slurp(fixture_path(name));
    const Instance once = parse_instance(bytes);
    const std::string canon = serialize_instance(once);
    const Instance twice = parse_instance(canon);
    CHECK(once == twice);
    CHECK(serialize_instance(twice) == canon);  // serialization is stable
  }
}

TEST_CASE("reports on an empty design keep all sections with zero cost") {
  const Instance inst = parse_instance(kMinimal);
  const MultiLayerGraph mlg = synthesize(inst);
  const SolverConfig cfg{SolverMode::kGreedy, 0, 0, 0};
  const SolveResult r = solve(mlg, inst, cfg);
  const DesignReport report = build_report(mlg, inst, r, cfg);

  const std::string text = emit_report(report, ReportFormat::kText);
  CHECK(text.find("cost: total=0") != std::string::npos);
  CHECK(text.find("installed LSRs (0/1)") != std::string::npos);
  CHECK(text.find("demand routes:") != std::string::npos);

  const DesignReport back =
      parse_report(emit_report(report, ReportFormat::kStructured));
  CHECK(back.cost.total == 0);
  CHECK(back.lsrs.size() == 1);
  CHECK(back.links.size() == 1);
}

TEST_CASE("structured report cost matches objective bit-exactly on I1") {
  const Instance inst = parse_instance(slurp(fixture_path("i1_ring.json")));
  const MultiLayerGraph mlg = synthesize(inst);
  const SolverConfig cfg{SolverMode::kExactBruteForce, 0, 0, 0};
  const SolveResult r = solve(mlg, inst, cfg);
  REQUIRE(feasible(r));
  const Design& design = std::get<Design>(r);

  const DesignReport report = build_report(mlg, inst, r, cfg, 0.0);
  const DesignReport back =
      parse_report(emit_report(report, ReportFormat::kStructured));
  CHECK(back.cost.total == objective(mlg, inst, design));
  CHECK(back.cost.equipment + back.cost.transport_fixed + back.cost.transport_modules ==
        back.cost.total);
  CHECK(back.optimality_gap_pct.has_value());
}

TEST_CASE("structured report re-emits byte-identically after a parse") {
  const Instance inst = parse_instance(slurp(fixture_path("i2_contention.json")));
  const MultiLayerGraph mlg = synthesize(inst);
  const SolverConfig cfg = SolverConfig::from_defaults(inst.solver);
  const SolveResult r = solve(mlg, inst, cfg);
  const DesignReport report = build_report(mlg, inst, r, cfg);
  const std::string bytes = emit_report(report, ReportFormat::kStructured);
  CHECK(emit_report(parse_report(bytes), ReportFormat::kStructured) == bytes);
}

TEST_CASE("dot output counts: one vertex per node and LSR, dashed mappings") {
  const Instance inst = parse_instance(slurp(fixture_path("i1_ring.json")));
  const MultiLayerGraph mlg = synthesize(inst);
  const SolverConfig cfg{SolverMode::kGreedy, 0, 0, 0};
  const SolveResult r = solve(mlg, inst, cfg);
  const DesignReport report = build_report(mlg, inst, r, cfg);
  const std::string dot = emit_report(report, ReportFormat::kDot);

  // 5 transport nodes + 3 LSR candidates; one dashed mapping per LSR.
  CHECK(count_occurrences(dot, "[shape=ellipse]") == 5);
  CHECK(count_occurrences(dot, "[shape=box") == 3);
  CHECK(count_occurrences(dot, "style=dashed") == 3);
  CHECK(dot.find("cluster_transport") != std::string::npos);
  CHECK(dot.find("cluster_logical") != std::string::npos);
}

TEST_CASE("cli: validate") {
  std::ostringstream out, err;
  CHECK(cli_main({"validate", fixture_path("i1_ring.json")}, out, err) == kExitOk);
  CHECK(out.str().find("OK: i1-ring") != std::string::npos);

  std::ostringstream out2, err2;
  CHECK(cli_main({"validate", "/nonexistent.json"}, out2, err2) == kExitInputError);
  CHECK(count_occurrences(err2.str(), "\n") == 1);  // one diagnostic line
}

TEST_CASE("cli: validate on a malformed file exits 2 with one diagnostic line") {
  const std::string bad = "/tmp/mlgd_bad_instance.json";
  {
    std::ofstream f(bad);
    f << "{\"meta\": {\"name\": \"x\"}}";
  }
  std::ostringstream out, err;
  CHECK(cli_main({"validate", bad}, out, err) == kExitInputError);
  CHECK(count_occurrences(err.str(), "\n") == 1);
  CHECK(err.str().find("error:") != std::string::npos);
}

TEST_CASE("cli: solve exits 1 on infeasible instances") {
  std::ostringstream out, err;
  const int code =
      cli_main({"solve", fixture_path("i3_cut.json"), "--mode", "exact"}, out, err);
  CHECK(code == kExitInfeasible);
  CHECK(err.str().find("infeasible") != std::string::npos);
  CHECK(out.str().find("status: infeasible") != std::string::npos);
}

TEST_CASE("cli: exact on an oversized instance exits 3") {
  const std::string big = "/tmp/mlgd_big_instance.json";
  {
    std::ofstream f(big);
    f << R"({"meta": {"name": "big", "version": 1}, "nodes": [)";
    for (int i = 0; i < 11; ++i)
      f << (i ? "," : "") << R"({"id": "n)" << i
        << R"(", "lsr_candidate": true, "lsr_install_cost": 1})";
    f << R"(], "links": [)";
    for (int i = 0; i + 1 < 11; ++i)
      f << (i ? "," : "") << R"({"a": "n)" << i << R"(", "b": "n)" << i + 1
        << R"(", "fixed_cost": 1, "module_size": 8, "module_cost": 1, "max_modules": 4})";
    f << R"(], "demands": [], "policy": {"k_paths": 1, "logical_edge_rule": "full_mesh"}})";
  }
  std::ostringstream out, err;
  CHECK(cli_main({"solve", big, "--mode", "exact"}, out, err) == kExitLimitExceeded);
}

TEST_CASE("cli: compare prints the greedy >= ls >= exact table") {
  std::ostringstream out, err;
  CHECK(cli_main({"compare", fixture_path("i1_ring.json")}, out, err) == kExitOk);
  const std::string table = out.str();
  CHECK(table.find("greedy\t50") != std::string::npos);
  CHECK(table.find("exact\t45\t0.00%") != std::string::npos);

  std::ostringstream out3, err3;
  CHECK(cli_main({"compare", fixture_path("i3_cut.json")}, out3, err3) ==
        kExitInfeasible);
}

TEST_CASE("cli: structured solve output is byte-identical across runs") {
  auto run = [&](const std::string& file) {
    std::ostringstream out, err;
    const int code = cli_main(
        {"solve", file, "--mode", "ls", "--seed", "9", "--budget", "80",
         "--format", "structured"},
        out, err);
    CHECK(code == kExitOk);
    return out.str();
  };
  const std::string first = run(fixture_path("i1_ring.json"));
  const std::string second = run(fixture_path("i1_ring.json"));
  CHECK(first == second);
  CHECK(!first.empty());
}

TEST_CASE("cli: synth prints stats and --out writes the report file") {
  std::ostringstream out, err;
  CHECK(cli_main({"synth", fixture_path("i1_ring.json")}, out, err) == kExitOk);
  CHECK(out.str().find("layers: 4") != std::string::npos);
  CHECK(out.str().find("validation: OK") != std::string::npos);

  const std::string report_path = "/tmp/mlgd_report_out.json";
  std::ostringstream out2, err2;
  CHECK(cli_main({"solve", fixture_path("i2_contention.json"), "--mode", "exact",
                  "--format", "structured", "--out", report_path},
                 out2, err2) == kExitOk);
  CHECK(out2.str().empty());  // everything went to the file
  const DesignReport report = parse_report(slurp(report_path));
  CHECK(report.cost.total == 30);

  std::ostringstream out3, err3;
  CHECK(cli_main({"frobnicate"}, out3, err3) == kExitInputError);
}
