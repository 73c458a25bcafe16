// Copyright (c) The GENMR Authors
//
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

// Top-level acceptance checks. Each test case prints one
//   [ACCEPTANCE] criterion N (<name>): PASS|FAIL
// line so the suite doubles as a release checklist.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "genmr/cluster.hpp"
#include "genmr/driver.hpp"
#include "genmr/error.hpp"
#include "genmr/executor.hpp"
#include "genmr/fixture.hpp"
#include "genmr/oracle.hpp"
#include "genmr/parser.hpp"
#include "genmr/placement.hpp"
#include "genmr/plan.hpp"
#include "test_util.hpp"

using namespace genmr;

namespace {

struct Criterion {
  int id;
  const char* name;
  bool ok = true;
  std::vector<std::string> details;

  void expect(bool condition, const std::string& what) {
    if (condition) return;
    ok = false;
    if (details.size() < 12) details.push_back(what);
  }

  void report() const {
    std::printf("[ACCEPTANCE] criterion %d (%s): %s\n", id, name, ok ? "PASS" : "FAIL");
    for (const auto& d : details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    CHECK_MESSAGE(ok, "criterion ", id, " (", std::string(name), ") failed");
  }
};

RunConfig matrix_config(const std::string& text, Dialect dialect, PartitionMode mode,
                        PlacementStrategy strategy, std::size_t capacity) {
  RunConfig cfg;
  cfg.query_text = text;
  cfg.dialect = dialect;
  cfg.racks = 3;
  cfg.nodes_per_rack = 33;
  cfg.capacity = capacity;
  cfg.mode = mode;
  cfg.strategy = strategy;
  cfg.rounding = RoundingMode::Ceil;
  cfg.reducers = 1;
  return cfg;
}

const char* mode_flag(PartitionMode mode) {
  return mode == PartitionMode::IntraRack ? "intra" : "inter";
}

const char* strategy_flag(PlacementStrategy strategy) {
  switch (strategy) {
    case PlacementStrategy::Colocated: return "colocated";
    case PlacementStrategy::IntraRackReducer: return "intra-reducer";
    case PlacementStrategy::InterRackReducer: return "inter-reducer";
  }
  return "colocated";
}

constexpr PartitionMode kModes[] = {PartitionMode::IntraRack, PartitionMode::InterRack};
constexpr PlacementStrategy kStrategies[] = {PlacementStrategy::Colocated,
                                             PlacementStrategy::IntraRackReducer,
                                             PlacementStrategy::InterRackReducer};
constexpr Dialect kDialects[] = {Dialect::Sql, Dialect::MySql, Dialect::Oracle,
                                 Dialect::Db2};
constexpr std::size_t kCapacities[] = {10, 30, 50};

}  // namespace

TEST_CASE("acceptance criterion 1") {
  Criterion c{1, "table6_mapper_counts"};

  c.expect(required_datanodes(325, 10, RoundingMode::FloorCompat) == 32,
           "required_datanodes(325,10,floor) != 32");
  c.expect(required_datanodes(325, 30, RoundingMode::FloorCompat) == 10,
           "required_datanodes(325,30,floor) != 10");
  c.expect(required_datanodes(325, 50, RoundingMode::FloorCompat) == 6,
           "required_datanodes(325,50,floor) != 6");

  const auto table = fixture_table(kDefaultFixtureSeed, 325);

  // Capacity 10 exceeds one default rack (12 nodes), so it spreads across
  // racks; 30 and 50 fit on rack 0 alone.
  struct Sweep {
    std::size_t capacity;
    PartitionMode mode;
    std::size_t mappers;
  };
  for (const auto& sweep : {Sweep{10, PartitionMode::InterRack, 32},
                            Sweep{30, PartitionMode::IntraRack, 10},
                            Sweep{50, PartitionMode::IntraRack, 6}}) {
    const ClusterTopology topo{3, 12, sweep.capacity};
    const auto layout = partition(table, topo, sweep.mode, RoundingMode::FloorCompat);
    const auto mappers = place_mappers(layout);
    c.expect(mappers.size() == sweep.mappers,
             "capacity " + std::to_string(sweep.capacity) + " placed " +
                 std::to_string(mappers.size()) + " mappers, want " +
                 std::to_string(sweep.mappers));
  }

  const ClusterTopology wide{3, 33, 10};
  const auto ceil_layout =
      partition(table, wide, PartitionMode::InterRack, RoundingMode::Ceil);
  c.expect(place_mappers(ceil_layout).size() == 33, "ceil rounding should place 33 mappers");

  c.report();
}

TEST_CASE("acceptance criterion 2") {
  Criterion c{2, "oracle_equivalence"};

  // Every form text parses to one dialect-neutral ast under all four
  // dialect spellings; the pipeline sees only that ast.
  for (int form = 1; form <= 19; ++form) {
    const auto reference = parse(test::form_query(form), Dialect::Sql);
    for (Dialect d : kDialects) {
      if (!(parse(test::form_query_in_dialect(form, d), d) == reference)) {
        c.expect(false, "form " + std::to_string(form) + " dialect " +
                            dialect_name(d) + " parsed differently");
      }
    }
  }

  // Full in-process matrix: forms x dialects x modes x strategies x
  // capacities, each verified against the direct evaluation.
  std::size_t runs = 0;
  for (int form = 1; form <= 19; ++form) {
    for (Dialect d : kDialects) {
      for (PartitionMode mode : kModes) {
        for (PlacementStrategy strategy : kStrategies) {
          for (std::size_t capacity : kCapacities) {
            auto cfg = matrix_config(test::form_query_in_dialect(form, d), d, mode,
                                     strategy, capacity);
            try {
              const auto v = verify_pipeline(cfg);
              ++runs;
              if (!v.diff.match) {
                std::string head =
                    v.diff.mismatches.empty() ? "" : " | " + v.diff.mismatches[0];
                c.expect(false, "mismatch: form " + std::to_string(form) + " " +
                                    dialect_name(d) + " " + mode_flag(mode) + " " +
                                    strategy_flag(strategy) + " q=" +
                                    std::to_string(capacity) + head);
              }
              const bool want_ordered = ordered_comparison(v.run.ast);
              c.expect(v.diff.ordered == want_ordered, "comparison shape drifted");
            } catch (const Error& e) {
              c.expect(false, std::string("run failed: form ") + std::to_string(form) +
                                  " " + mode_flag(mode) + " " + strategy_flag(strategy) +
                                  " q=" + std::to_string(capacity) + ": " + e.what());
            }
          }
        }
      }
    }
  }
  c.expect(runs == std::size_t{19} * 4 * 2 * 3 * 3,
           "expected 1368 verification runs, got " + std::to_string(runs));

  // A stratified sample goes through the real process boundary so the exit
  // code contract is exercised, not just the library path.
  int spawn_idx = 0;
  for (int form = 1; form <= 19; ++form) {
    for (Dialect d : kDialects) {
      const PartitionMode mode = kModes[spawn_idx % 2];
      const PlacementStrategy strategy = kStrategies[(spawn_idx / 2) % 3];
      const std::size_t capacity = kCapacities[(spawn_idx / 6) % 3];
      ++spawn_idx;
      const std::string args =
          std::string("verify \"") + test::form_query_in_dialect(form, d) +
          "\" --dialect " + dialect_name(d) + " --racks 3 --nodes-per-rack 33" +
          " --capacity " + std::to_string(capacity) + " --mode " + mode_flag(mode) +
          " --strategy " + strategy_flag(strategy);
      const auto r = test::run_cli(args);
      if (r.exit_code != 0) {
        c.expect(false, "cmd_verify exit " + std::to_string(r.exit_code) + " for: " +
                            args + " | " + r.output.substr(0, 120));
      }
    }
  }

  c.report();
}

TEST_CASE("acceptance criterion 3") {
  Criterion c{3, "intra_beats_inter"};

  const auto table = fixture_table(kDefaultFixtureSeed, 325);
  const auto workload = test::workload_queries();
  const ClusterTopology topo{3, 33, 10};
  const CostModel cost;

  for (PartitionMode mode : kModes) {
    const auto layout = partition(table, topo, mode, RoundingMode::Ceil);
    for (std::size_t qi = 0; qi < workload.size(); ++qi) {
      const auto ast = parse(workload[qi], Dialect::Sql);
      const auto plan = compile(ast, "teachers", table.schema);

      const auto colocated =
          execute(plan, table, layout,
                  build_placement(layout, PlacementStrategy::Colocated, 1), cost);
      const auto remote =
          execute(plan, table, layout,
                  build_placement(layout, PlacementStrategy::InterRackReducer, 1), cost);

      if (remote.times.makespan < colocated.times.makespan) {
        c.expect(false, "query " + std::to_string(qi + 1) + " on " + mode_flag(mode) +
                            " layout: inter-rack reducer " +
                            std::to_string(remote.times.makespan) + " < colocated " +
                            std::to_string(colocated.times.makespan));
      }
      c.expect(remote.times.shuffle_time >= colocated.times.shuffle_time,
               "query " + std::to_string(qi + 1) +
                   ": shuffle got cheaper with a remote reducer");
    }
  }

  c.report();
}

TEST_CASE("acceptance criterion 4") {
  Criterion c{4, "ten_mapper_sweet_spot"};

  // Brute-force prediction of the aggregation makespan straight from the
  // cost formulas, written without the executor: one mapper per block,
  // the remainder folded into the last block, a single colocated reducer
  // on the first occupied node.
  struct Predicted {
    std::uint64_t mappers;
    std::uint64_t map_time;
    std::uint64_t shuffle_time;
    std::uint64_t reduce_time;
    std::uint64_t makespan;
  };
  const auto predict = [](std::uint64_t z, std::uint64_t q, int racks,
                          PartitionMode mode) -> Predicted {
    const std::uint64_t t_map = 1000, t_reduce = 1000, t_intra = 500, t_inter = 5000,
                        t_local = 0, t_start = 2000;
    const std::uint64_t blocks = std::max<std::uint64_t>(1, z / q);
    std::vector<std::uint64_t> load(blocks, q);
    load[blocks - 1] += z % q;

    std::uint64_t map_time = 0;
    for (const auto rows : load) map_time = std::max(map_time, t_start + rows * t_map);

    // Block b sits on rack 0 (intra) or rack b mod racks (inter); the
    // reducer shares block 0's node, so only block 0 ships locally.
    std::uint64_t shuffle_time = 0;
    for (std::uint64_t b = 0; b < blocks; ++b) {
      const int rack =
          mode == PartitionMode::IntraRack ? 0 : static_cast<int>(b % racks);
      std::uint64_t per_record = t_inter;
      if (b == 0) {
        per_record = t_local;
      } else if (rack == 0) {
        per_record = t_intra;
      }
      shuffle_time = std::max(shuffle_time, load[b] * per_record);
    }

    const std::uint64_t reduce_time = t_start + z * t_reduce;
    return {blocks, map_time, shuffle_time, reduce_time,
            map_time + shuffle_time + reduce_time};
  };

  const Predicted p32 = predict(325, 10, 3, PartitionMode::InterRack);
  const Predicted p10 = predict(325, 30, 3, PartitionMode::IntraRack);
  const Predicted p6 = predict(325, 50, 3, PartitionMode::IntraRack);

  c.expect(p32.mappers == 32 && p10.mappers == 10 && p6.mappers == 6,
           "mapper arithmetic drifted");
  c.expect(p32.makespan == 419000, "32-mapper prediction " + std::to_string(p32.makespan) +
                                       " != frozen 419000");
  c.expect(p10.makespan == 411500, "10-mapper prediction " + std::to_string(p10.makespan) +
                                       " != frozen 411500");
  c.expect(p6.makespan == 441500, "6-mapper prediction " + std::to_string(p6.makespan) +
                                      " != frozen 441500");

  // The executor must agree with the prediction phase by phase.
  const auto run_makespan = [&c](std::size_t capacity, PartitionMode mode,
                                 const Predicted& want) {
    RunConfig cfg;
    cfg.query_text = "SELECT COUNT(State) FROM teachers";
    cfg.capacity = capacity;
    cfg.mode = mode;
    cfg.rounding = RoundingMode::FloorCompat;
    const auto result = run_pipeline(cfg);
    c.expect(result.report.mapper_count == want.mappers,
             std::to_string(want.mappers) + "-mapper run placed " +
                 std::to_string(result.report.mapper_count));
    c.expect(result.report.times.map_time == want.map_time &&
                 result.report.times.shuffle_time == want.shuffle_time &&
                 result.report.times.reduce_time == want.reduce_time,
             std::to_string(want.mappers) + "-mapper phase times diverge from prediction");
    return result.report.times.makespan;
  };

  const std::uint64_t m32 = run_makespan(10, PartitionMode::InterRack, p32);
  const std::uint64_t m10 = run_makespan(30, PartitionMode::IntraRack, p10);
  const std::uint64_t m6 = run_makespan(50, PartitionMode::IntraRack, p6);

  c.expect(m32 == p32.makespan && m10 == p10.makespan && m6 == p6.makespan,
           "executor disagrees with the brute-force prediction");
  c.expect(m10 < m6, "10 mappers should beat 6 (" + std::to_string(m10) +
                         " vs " + std::to_string(m6) + ")");
  c.expect(m10 < m32, "10 mappers should beat 32 (" + std::to_string(m10) +
                          " vs " + std::to_string(m32) + ")");

  c.report();
}

TEST_CASE("acceptance criterion 5") {
  Criterion c{5, "thread_determinism"};

  const std::vector<std::string> query_configs = {
      "query \"SELECT COUNT(State) FROM teachers\" --nodes-per-rack 33 "
      "--mode inter --rounding floor-compat",
      "query \"SELECT * FROM teachers WHERE State='Andhra Pradesh'\" "
      "--nodes-per-rack 33 --capacity 30 --strategy intra-reducer",
      "query \"SELECT * FROM teachers ORDER BY Name DESC\" --nodes-per-rack 33 "
      "--mode inter --strategy inter-reducer --reducers 4",
      "query \"SELECT State, COUNT(State) FROM teachers GROUP BY State\" "
      "--nodes-per-rack 33 --capacity 50 --reducers 2",
      "query \"SELECT SUBSTRING(State,1,5) FROM teachers WHERE State = 'Andhra Pradesh' "
      "OR School_Type='Secondary School'\" --nodes-per-rack 33 --capacity 30 "
      "--mode inter --strategy inter-reducer --reducers 3",
  };

  int config_id = 0;
  for (const auto& base : query_configs) {
    const auto one = test::temp_path("acc5_t1_" + std::to_string(config_id) + ".json");
    const auto many = test::temp_path("acc5_t8_" + std::to_string(config_id) + ".json");
    const auto r1 = test::run_cli(base + " --threads 1 --out " + one);
    const auto r8 = test::run_cli(base + " --threads 8 --out " + many);
    c.expect(r1.exit_code == 0 && r8.exit_code == 0,
             "config " + std::to_string(config_id) + " failed to run");
    if (r1.exit_code == 0 && r8.exit_code == 0) {
      c.expect(test::slurp(one) == test::slurp(many),
               "config " + std::to_string(config_id) + " report differs across threads");
    }
    ++config_id;
  }

  const auto queries = test::temp_path("acc5_queries.txt");
  std::string body;
  for (const auto& q : test::workload_queries()) body += q + "\n";
  test::spit(queries, body);
  const auto bench1 = test::temp_path("acc5_bench1.csv");
  const auto bench8 = test::temp_path("acc5_bench8.csv");
  const std::string bench_base = "bench --queries " + queries +
                                 " --capacities 10,30,50 --nodes-per-rack 33 --reducers 2";
  const auto b1 = test::run_cli(bench_base + " --threads 1 --out " + bench1);
  const auto b8 = test::run_cli(bench_base + " --threads 8 --out " + bench8);
  c.expect(b1.exit_code == 0 && b8.exit_code == 0, "bench sweep failed to run");
  if (b1.exit_code == 0 && b8.exit_code == 0) {
    c.expect(test::slurp(bench1) == test::slurp(bench8),
             "bench output differs across threads");
  }

  c.report();
}

TEST_CASE("acceptance criterion 6") {
  Criterion c{6, "property_suites"};

  // (a) parse-render round trip.
  {
    test::AstGen gen(0xACCE9701);
    int failures = 0;
    for (int i = 0; i < 1000; ++i) {
      const QueryAst ast = gen.next();
      try {
        if (!(parse(render_canonical(ast), Dialect::Sql) == ast)) ++failures;
      } catch (const Error&) {
        ++failures;
      }
    }
    c.expect(failures == 0,
             "parse(render()) failed on " + std::to_string(failures) + " of 1000 asts");
  }

  // (b) partition conservation and capacity invariants.
  {
    Xoshiro256ss rng(0xACCE9702);
    int failures = 0;
    int feasible = 0;
    for (int i = 0; i < 1000; ++i) {
      const ClusterTopology topo{1 + static_cast<int>(rng.bounded(4)),
                                 1 + static_cast<int>(rng.bounded(16)),
                                 1 + rng.bounded(25)};
      const std::size_t z = rng.bounded(380);
      const auto mode =
          rng.bounded(2) == 0 ? PartitionMode::IntraRack : PartitionMode::InterRack;
      const auto rounding =
          rng.bounded(2) == 0 ? RoundingMode::Ceil : RoundingMode::FloorCompat;
      const std::size_t bound =
          (mode == PartitionMode::IntraRack ? 1u : static_cast<std::size_t>(topo.n_racks)) *
          static_cast<std::size_t>(topo.m_nodes_per_rack) * topo.q_capacity;

      TableData t;
      t.name = "t";
      t.schema.columns = {"id"};
      for (std::size_t r = 0; r < z; ++r) t.rows.push_back({std::to_string(r)});

      if (z > bound) {
        try {
          partition(t, topo, mode, rounding);
          ++failures;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::InsufficientCapacity) ++failures;
        }
        continue;
      }
      ++feasible;
      const auto layout = partition(t, topo, mode, rounding);
      std::set<std::size_t> seen;
      std::map<NodeId, std::size_t> loads;
      bool bad = layout.assignment.size() != z;
      for (const auto& a : layout.assignment) {
        if (!seen.insert(a.row).second) bad = true;
        if (mode == PartitionMode::IntraRack && a.rack != 0) bad = true;
        ++loads[{a.rack, a.node}];
      }
      std::size_t overfull = 0;
      for (const auto& [node, count] : loads) {
        if (count > topo.q_capacity) {
          ++overfull;
          if (rounding != RoundingMode::FloorCompat) bad = true;
          if (count != topo.q_capacity + z % topo.q_capacity) bad = true;
        }
      }
      if (overfull > 1) bad = true;
      if (loads.size() != required_datanodes(z, topo.q_capacity, rounding)) bad = true;
      if (bad) ++failures;
    }
    c.expect(failures == 0,
             "partition invariants failed on " + std::to_string(failures) + " tuples");
    c.expect(feasible >= 300, "tuple generator starved the feasible side");
  }

  // (c) shuffle conservation on every executed configuration.
  {
    const auto table = fixture_table(kDefaultFixtureSeed, 325);
    const ClusterTopology topo{3, 33, 30};
    int failures = 0;
    int executed = 0;
    for (int form = 0; form <= 19; ++form) {
      const auto ast = parse(test::form_query(form), Dialect::Sql);
      const auto plan = compile(ast, "teachers", table.schema);
      for (PartitionMode mode : kModes) {
        const auto layout = partition(table, topo, mode, RoundingMode::Ceil);
        for (PlacementStrategy strategy : kStrategies) {
          for (int reducers : {1, 4}) {
            const auto placement = build_placement(layout, strategy, reducers);
            const auto report = execute(plan, table, layout, placement, CostModel{});
            ++executed;
            std::uint64_t logged = 0;
            for (const auto& t : report.shuffle_log.transfers) logged += t.records;
            std::uint64_t reduced = 0;
            for (const auto n : report.reducer_records_in) reduced += n;
            if (logged != report.records_emitted || reduced != report.records_emitted) {
              ++failures;
            }
          }
        }
      }
    }
    c.expect(failures == 0,
             "conservation failed on " + std::to_string(failures) + " configurations");
    c.expect(executed == 20 * 2 * 3 * 2, "conservation sweep lost configurations");
  }

  // (d) rack-cost product identities.
  c.expect(eq1_cost(2, 3, 4) == 24, "eq1_cost(2,3,4) != 24");
  c.expect(eq1_cost(0, 3, 4) == 0 && eq1_cost(2, 0, 4) == 0 && eq1_cost(2, 3, 0) == 0,
           "eq1_cost zero-factor identity broken");

  c.report();
}

TEST_CASE("acceptance criterion 7") {
  Criterion c{7, "error_paths"};

  struct Case {
    const char* label;
    std::string args;
    int exit_code;
    const char* needle;
  };
  const Case cases[] = {
      {"join", "query \"SELECT a FROM t JOIN u\"", 2, "UnsupportedConstruct"},
      {"one-rack inter reducer",
       "query \"SELECT COUNT(State) FROM teachers\" --racks 1 --nodes-per-rack 33 "
       "--strategy inter-reducer",
       3, "StrategyInfeasible"},
      {"capacity", "query \"SELECT COUNT(State) FROM teachers\"", 3,
       "InsufficientCapacity"},
  };
  for (const auto& k : cases) {
    const auto r = test::run_cli(k.args);
    c.expect(r.exit_code == k.exit_code,
             std::string(k.label) + ": exit " + std::to_string(r.exit_code) + ", want " +
                 std::to_string(k.exit_code));
    c.expect(r.output.find(k.needle) != std::string::npos,
             std::string(k.label) + ": message lacks " + k.needle);
  }

  const auto ragged_path = test::temp_path("acc7_ragged.csv");
  test::spit(ragged_path, "State,Name\nAssam,A\nBihar\n");
  const auto ragged =
      test::run_cli("query \"SELECT COUNT(State) FROM t\" --csv " + ragged_path);
  c.expect(ragged.exit_code == 4, "ragged csv should exit 4");
  c.expect(ragged.output.find("RaggedRow") != std::string::npos &&
               ragged.output.find("line 3") != std::string::npos,
           "ragged csv message should name RaggedRow and the line");

  c.report();
}
