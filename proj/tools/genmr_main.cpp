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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "genmr/driver.hpp"
#include "genmr/error.hpp"

namespace {

using namespace genmr;

const std::map<std::string, Dialect> kDialects{
    {"sql", Dialect::Sql},
    {"mysql", Dialect::MySql},
    {"oracle", Dialect::Oracle},
    {"db2", Dialect::Db2},
};

const std::map<std::string, PartitionMode> kModes{
    {"intra", PartitionMode::IntraRack},
    {"inter", PartitionMode::InterRack},
};

const std::map<std::string, PlacementStrategy> kStrategies{
    {"colocated", PlacementStrategy::Colocated},
    {"intra-reducer", PlacementStrategy::IntraRackReducer},
    {"inter-reducer", PlacementStrategy::InterRackReducer},
    {"intra-rack-reducer", PlacementStrategy::IntraRackReducer},
    {"inter-rack-reducer", PlacementStrategy::InterRackReducer},
};

const std::map<std::string, RoundingMode> kRoundings{
    {"ceil", RoundingMode::Ceil},
    {"floor-compat", RoundingMode::FloorCompat},
};

int default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) fail(ErrorCode::IoError, "cannot write to '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "'");
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  if (in.bad()) fail(ErrorCode::IoError, "cannot read '" + path + "'");
  return content;
}

void add_data_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--csv", cfg.csv_path,
                  "CSV file backing the queried table (default: built-in fixture)");
  cmd->add_option("--seed", cfg.fixture_seed, "Fixture PRNG seed")
      ->capture_default_str();
  cmd->add_option("--rows", cfg.fixture_rows, "Fixture row count")
      ->capture_default_str();
  cmd->add_option("--dialect", cfg.dialect, "Query dialect")
      ->transform(CLI::CheckedTransformer(kDialects, CLI::ignore_case))
      ->default_str("sql");
}

void add_cluster_flags(CLI::App* cmd, RunConfig& cfg, bool with_strategy = true) {
  cmd->add_option("--racks", cfg.racks, "Rack count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--nodes-per-rack", cfg.nodes_per_rack, "Datanodes per rack")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--capacity", cfg.capacity, "Rows per datanode")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--mode", cfg.mode, "Partitioning mode")
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case))
      ->default_str("intra");
  if (with_strategy) {
    cmd->add_option("--strategy", cfg.strategy, "Reducer placement strategy")
        ->transform(CLI::CheckedTransformer(kStrategies, CLI::ignore_case))
        ->default_str("colocated");
  }
  cmd->add_option("--rounding", cfg.rounding, "Datanode-count rounding")
      ->transform(CLI::CheckedTransformer(kRoundings, CLI::ignore_case))
      ->default_str("ceil");
  cmd->add_option("--reducers", cfg.reducers, "Reducer task count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--threads", cfg.threads, "Worker threads (results never depend on this)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--t-map", cfg.cost.t_map, "Cost per mapped record (milli-units)")
      ->capture_default_str();
  cmd->add_option("--t-reduce", cfg.cost.t_reduce, "Cost per reduced record")
      ->capture_default_str();
  cmd->add_option("--t-intra", cfg.cost.t_intra, "Cost per record crossing nodes in a rack")
      ->capture_default_str();
  cmd->add_option("--t-inter", cfg.cost.t_inter, "Cost per record crossing racks")
      ->capture_default_str();
  cmd->add_option("--t-local", cfg.cost.t_local, "Cost per node-local record")
      ->capture_default_str();
  cmd->add_option("--t-start", cfg.cost.t_start, "Startup cost per task")
      ->capture_default_str();
  cmd->add_flag("--inject-drop-record", cfg.inject_drop_record,
                "Drop one shuffled record (verification self-test)")
      ->group("");
}

Schema synthesized_schema(const QueryAst& ast) {
  Schema schema;
  auto add = [&schema](const std::string& name) {
    if (name.empty()) return;
    if (!schema.index_of(name)) schema.columns.push_back(name);
  };
  add(ast.column);
  if (ast.predicate) {
    for (const auto& term : ast.predicate->terms) add(term.column);
  }
  if (ast.order_by) add(ast.order_by->column);
  if (ast.group_by) add(*ast.group_by);
  if (schema.columns.empty()) schema.columns.push_back("column_1");
  return schema;
}

int cmd_explain(const RunConfig& cfg) {
  const QueryAst ast = parse(cfg.query_text, cfg.dialect);
  Schema schema;
  if (cfg.csv_path.empty()) {
    schema = synthesized_schema(ast);
  } else {
    schema = ingest_csv(cfg.csv_path, ast.table).schema;
  }
  const MapReducePlan plan = compile(ast, ast.table, schema);
  std::cout << describe_plan(plan) << "\n";
  std::cout << "form: " << plan.form << " (" << form_name(plan.form) << ")\n";
  std::cout << "canonical: " << render_canonical(ast) << "\n";
  return 0;
}

int cmd_query(const RunConfig& cfg, const std::string& out_path) {
  const RunResult run = run_pipeline(cfg);
  write_output(out_path,
               report_to_json(run.echo, run.report, run.layout, run.placement));
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const VerifyResult v = verify_pipeline(cfg);
  const char* shape = v.diff.ordered ? "ordered" : "multiset";
  if (v.diff.match) {
    std::cout << "verify: OK rows=" << v.run.report.result_rows.size() << " (" << shape
              << ")\n";
    return 0;
  }
  std::cout << "verify: MISMATCH (" << shape << ")\n";
  for (const auto& line : v.diff.mismatches) std::cout << "  " << line << "\n";
  return 1;
}

int cmd_oracle(const RunConfig& cfg) {
  const QueryAst ast = parse(cfg.query_text, cfg.dialect);
  TableData table;
  if (cfg.csv_path.empty()) {
    table = fixture_table(cfg.fixture_seed, cfg.fixture_rows);
    table.name = ast.table;
  } else {
    table = ingest_csv(cfg.csv_path, ast.table);
  }
  const OracleResult result = eval(ast, table);
  for (const auto& row : result.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << row[i];
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_bench(const RunConfig& cfg, const std::string& queries_path,
              const std::vector<std::size_t>& capacities,
              const std::vector<PlacementStrategy>& strategies,
              const std::string& out_path) {
  const auto queries = load_queries_text(read_file(queries_path), cfg.dialect);
  if (queries.empty()) {
    fail(ErrorCode::IoError, "queries file '" + queries_path + "' holds no queries");
  }
  write_output(out_path, bench_csv(cfg, queries, capacities, strategies));
  return 0;
}

int cmd_fixture(std::uint64_t seed, std::size_t rows, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << fixture_csv(seed, rows);
  } else {
    write_fixture_csv(out_path, seed, rows);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"genmr: multi-dialect SQL to MapReduce engine over a simulated rack cluster"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.threads = default_threads();
  try {
    cfg.cost = load_cost_model_env(cfg.cost);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_class(e.code());
  }
  std::string out_path;

  CLI::App* explain = app.add_subcommand("explain", "Show the compiled plan for a query");
  explain->add_option("query", cfg.query_text, "Query text")->required();
  add_data_flags(explain, cfg);

  CLI::App* query = app.add_subcommand("query", "Run a query and emit the JSON report");
  query->add_option("query", cfg.query_text, "Query text")->required();
  add_data_flags(query, cfg);
  add_cluster_flags(query, cfg);
  query->add_option("--out", out_path, "Report path (default: stdout)");

  CLI::App* verify = app.add_subcommand(
      "verify", "Run a query and compare the result against direct evaluation");
  verify->add_option("query", cfg.query_text, "Query text")->required();
  add_data_flags(verify, cfg);
  add_cluster_flags(verify, cfg);

  CLI::App* oracle =
      app.add_subcommand("oracle", "Evaluate a query directly, without MapReduce");
  oracle->add_option("query", cfg.query_text, "Query text")->required();
  add_data_flags(oracle, cfg);

  std::string queries_path;
  std::vector<std::size_t> capacities{10, 30, 50};
  std::vector<PlacementStrategy> strategies;
  CLI::App* bench = app.add_subcommand(
      "bench", "Sweep queries over capacities, partition modes, and strategies");
  bench->add_option("--queries", queries_path, "Queries file (one query per line)")
      ->required();
  bench->add_option("--capacities", capacities, "Datanode capacities to sweep")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--strategy", strategies, "Placement strategies to sweep (repeatable)")
      ->transform(CLI::CheckedTransformer(kStrategies, CLI::ignore_case));
  add_data_flags(bench, cfg);
  add_cluster_flags(bench, cfg, /*with_strategy=*/false);
  bench->add_option("--out", out_path, "CSV path (default: stdout)");

  std::uint64_t fixture_seed = kDefaultFixtureSeed;
  std::size_t fixture_rows = kDefaultFixtureRows;
  CLI::App* fixture =
      app.add_subcommand("fixture", "Write the deterministic synthetic teachers CSV");
  fixture->add_option("--seed", fixture_seed, "PRNG seed")->capture_default_str();
  fixture->add_option("--rows", fixture_rows, "Row count")->capture_default_str();
  fixture->add_option("--out", out_path, "CSV path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  // query/verify keep their single configured strategy; bench defaults to it.
  if (strategies.empty()) strategies.push_back(cfg.strategy);

  try {
    if (explain->parsed()) return cmd_explain(cfg);
    if (query->parsed()) return cmd_query(cfg, out_path);
    if (verify->parsed()) return cmd_verify(cfg);
    if (oracle->parsed()) return cmd_oracle(cfg);
    if (bench->parsed()) {
      return cmd_bench(cfg, queries_path, capacities, strategies, out_path);
    }
    if (fixture->parsed()) return cmd_fixture(fixture_seed, fixture_rows, out_path);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_class(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
