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

#include "genmr/driver.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "genmr/error.hpp"

namespace genmr {

RunResult run_pipeline(const RunConfig& config) {
  RunResult result;
  result.ast = parse(config.query_text, config.dialect);
  if (config.csv_path.empty()) {
    result.table = fixture_table(config.fixture_seed, config.fixture_rows);
    result.table.name = result.ast.table;
  } else {
    result.table = ingest_csv(config.csv_path, result.ast.table);
  }
  result.plan = compile(result.ast, result.table.name, result.table.schema);

  ClusterTopology topo;
  topo.n_racks = config.racks;
  topo.m_nodes_per_rack = config.nodes_per_rack;
  topo.q_capacity = config.capacity;
  result.layout = partition(result.table, topo, config.mode, config.rounding);
  result.placement = build_placement(result.layout, config.strategy, config.reducers);

  ExecuteOptions options;
  options.threads = config.threads;
  options.inject_drop_record = config.inject_drop_record;
  result.report = execute(result.plan, result.table, result.layout, result.placement,
                          config.cost, options);

  result.echo.query = render_canonical(result.ast);
  result.echo.dialect = dialect_name(config.dialect);
  result.echo.table = result.table.name;
  result.echo.csv_path = config.csv_path.empty() ? "<fixture>" : config.csv_path;
  result.echo.racks = config.racks;
  result.echo.nodes_per_rack = config.nodes_per_rack;
  result.echo.capacity = config.capacity;
  result.echo.mode = partition_mode_name(config.mode);
  result.echo.strategy = placement_strategy_name(config.strategy);
  result.echo.rounding = rounding_mode_name(config.rounding);
  result.echo.reducers = config.reducers;
  result.echo.cost = config.cost;
  result.echo.form = result.plan.form;
  result.echo.form_name = form_name(result.plan.form);
  result.echo.plan_summary = describe_plan(result.plan);
  return result;
}

VerifyResult verify_pipeline(const RunConfig& config) {
  VerifyResult v;
  v.run = run_pipeline(config);
  v.oracle = eval(v.run.ast, v.run.table);
  v.diff = diff(v.oracle, v.run.report.result_rows, ordered_comparison(v.run.ast));
  return v;
}

std::vector<QueryLine> load_queries_text(const std::string& text,
                                         Dialect default_dialect) {
  std::vector<QueryLine> queries;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t");
    std::string body = line.substr(begin, end - begin + 1);
    if (body[0] == '#') continue;
    Dialect dialect = default_dialect;
    const std::size_t colon = body.find(':');
    if (colon != std::string::npos) {
      if (auto d = dialect_from_name(body.substr(0, colon))) {
        dialect = *d;
        body = body.substr(colon + 1);
        const std::size_t lead = body.find_first_not_of(" \t");
        if (lead == std::string::npos) {
          fail(ErrorCode::SyntaxError,
               "queries file line " + std::to_string(line_no) + " has no query after the dialect prefix");
        }
        body = body.substr(lead);
      }
    }
    queries.push_back({dialect, body, line_no});
  }
  return queries;
}

std::string bench_csv(const RunConfig& base, const std::vector<QueryLine>& queries,
                      const std::vector<std::size_t>& capacities,
                      const std::vector<PlacementStrategy>& strategies) {
  for (const QueryLine& q : queries) {
    try {
      parse(q.text, q.dialect);
    } catch (const Error& e) {
      fail(e.code(), "queries file line " + std::to_string(q.line) + ": " + e.what());
    }
  }
  std::string out =
      "query_id,capacity,mappers,mode,strategy,map_time,shuffle_time,reduce_time,"
      "makespan,cross_rack_records,eq1_total\n";
  for (std::size_t qi = 0; qi < queries.size(); ++qi) {
    for (std::size_t capacity : capacities) {
      for (PartitionMode mode : {PartitionMode::IntraRack, PartitionMode::InterRack}) {
        for (PlacementStrategy strategy : strategies) {
          RunConfig config = base;
          config.dialect = queries[qi].dialect;
          config.query_text = queries[qi].text;
          config.capacity = capacity;
          config.mode = mode;
          config.strategy = strategy;
          RunResult run = run_pipeline(config);
          out += std::to_string(qi + 1);
          out.push_back(',');
          out += std::to_string(capacity);
          out.push_back(',');
          out += std::to_string(run.report.mapper_count);
          out.push_back(',');
          out += partition_mode_name(mode);
          out.push_back(',');
          out += placement_strategy_name(strategy);
          out.push_back(',');
          out += std::to_string(run.report.times.map_time);
          out.push_back(',');
          out += std::to_string(run.report.times.shuffle_time);
          out.push_back(',');
          out += std::to_string(run.report.times.reduce_time);
          out.push_back(',');
          out += std::to_string(run.report.times.makespan);
          out.push_back(',');
          out += std::to_string(run.report.traffic.total_cross_rack);
          out.push_back(',');
          out += std::to_string(run.report.eq1_total);
          out.push_back('\n');
        }
      }
    }
  }
  return out;
}

CostModel load_cost_model_file(const std::string& path, CostModel base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open cost-model file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::IoError, "cost-model file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object()) {
    fail(ErrorCode::IoError, "cost-model file '" + path + "' must hold a JSON object");
  }
  auto read = [&j, &path](const char* name, std::uint64_t& slot) {
    if (!j.contains(name)) return;
    const auto& v = j.at(name);
    if (!v.is_number_unsigned()) {
      fail(ErrorCode::IoError, "cost-model field '" + std::string(name) + "' in '" + path +
                                   "' must be a non-negative integer");
    }
    slot = v.get<std::uint64_t>();
  };
  read("t_map", base.t_map);
  read("t_reduce", base.t_reduce);
  read("t_intra", base.t_intra);
  read("t_inter", base.t_inter);
  read("t_local", base.t_local);
  read("t_start", base.t_start);
  return base;
}

CostModel load_cost_model_env(CostModel base) {
  const char* path = std::getenv("GENMR_COST_MODEL");
  if (!path || !*path) return base;
  return load_cost_model_file(path, base);
}

}  // namespace genmr
