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

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "genmr/cluster.hpp"
#include "genmr/executor.hpp"
#include "genmr/fixture.hpp"
#include "genmr/oracle.hpp"
#include "genmr/parser.hpp"
#include "genmr/placement.hpp"
#include "genmr/plan.hpp"
#include "genmr/report_json.hpp"

namespace genmr {

// One run's full configuration. The CSV is bound to whatever table the
// query names; when csv_path is empty the synthetic fixture is used.
struct RunConfig {
  std::string csv_path;
  std::uint64_t fixture_seed = kDefaultFixtureSeed;
  std::size_t fixture_rows = kDefaultFixtureRows;
  std::string query_text;
  Dialect dialect = Dialect::Sql;
  int racks = 3;
  int nodes_per_rack = 12;
  std::size_t capacity = 10;
  PartitionMode mode = PartitionMode::IntraRack;
  PlacementStrategy strategy = PlacementStrategy::Colocated;
  RoundingMode rounding = RoundingMode::Ceil;
  int reducers = 1;
  CostModel cost;
  int threads = 1;
  bool inject_drop_record = false;
};

// Everything produced by one pipeline run, kept for reporting and checks.
struct RunResult {
  QueryAst ast;
  MapReducePlan plan;
  TableData table;
  PartitionLayout layout;
  PlacementPlan placement;
  ExecutionReport report;
  RunEcho echo;
};

// Parse, compile, ingest, partition, place, execute.
RunResult run_pipeline(const RunConfig& config);

struct VerifyResult {
  RunResult run;
  OracleResult oracle;
  DiffReport diff;
};

// run_pipeline plus a direct oracle evaluation and comparison (ordered for
// ORDER BY and DISTINCT, multiset otherwise).
VerifyResult verify_pipeline(const RunConfig& config);

struct QueryLine {
  Dialect dialect = Dialect::Sql;
  std::string text;
  std::size_t line = 0;  // 1-based line in the queries file
};

// Parses a queries file body: one query per line, blank lines and lines
// starting with '#' ignored, optional per-line "sql:"/"mysql:"/"oracle:"/
// "db2:" prefix overriding the default dialect.
std::vector<QueryLine> load_queries_text(const std::string& text,
                                         Dialect default_dialect);

// Benchmark sweep: every query x capacity x {intra, inter} x strategy, one
// CSV data row each, in exactly that nesting order. All queries are parsed
// up front; a parse failure names its queries-file line. Columns:
// query_id,capacity,mappers,mode,strategy,map_time,shuffle_time,
// reduce_time,makespan,cross_rack_records,eq1_total.
std::string bench_csv(const RunConfig& base, const std::vector<QueryLine>& queries,
                      const std::vector<std::size_t>& capacities,
                      const std::vector<PlacementStrategy>& strategies);

// Applies a JSON cost-model file (any subset of t_map, t_reduce, t_intra,
// t_inter, t_local, t_start) on top of `base`.
CostModel load_cost_model_file(const std::string& path, CostModel base);

// Reads the file named by the GENMR_COST_MODEL environment variable, if set.
CostModel load_cost_model_env(CostModel base);

}  // namespace genmr
