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

#include "genmr/report_json.hpp"

#include <json.hpp>

namespace genmr {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json layout_json(const PartitionLayout& layout) {
  ordered_json j;
  j["mode"] = partition_mode_name(layout.mode);
  j["rounding"] = rounding_mode_name(layout.rounding);
  ordered_json rows = ordered_json::array();
  for (const auto& a : layout.assignment) {
    rows.push_back(ordered_json::array({a.row, a.rack, a.node}));
  }
  j["assignment"] = std::move(rows);
  return j;
}

ordered_json cost_json(const CostModel& cost) {
  ordered_json j;
  j["t_map"] = cost.t_map;
  j["t_reduce"] = cost.t_reduce;
  j["t_intra"] = cost.t_intra;
  j["t_inter"] = cost.t_inter;
  j["t_local"] = cost.t_local;
  j["t_start"] = cost.t_start;
  return j;
}

}  // namespace

std::string layout_to_json(const PartitionLayout& layout) {
  return layout_json(layout).dump(2) + "\n";
}

std::string report_to_json(const RunEcho& echo, const ExecutionReport& report,
                           const PartitionLayout& layout,
                           const PlacementPlan& placement) {
  ordered_json j;
  j["query"] = {
      {"text", echo.query},     {"dialect", echo.dialect}, {"table", echo.table},
      {"form", echo.form},      {"form_name", echo.form_name},
      {"plan", echo.plan_summary},
  };
  ordered_json config;
  config["csv"] = echo.csv_path;
  config["racks"] = echo.racks;
  config["nodes_per_rack"] = echo.nodes_per_rack;
  config["capacity"] = echo.capacity;
  config["partition_mode"] = echo.mode;
  config["strategy"] = echo.strategy;
  config["rounding"] = echo.rounding;
  config["reducers"] = echo.reducers;
  config["cost_model"] = cost_json(echo.cost);
  j["config"] = std::move(config);

  ordered_json exec;
  exec["mapper_count"] = report.mapper_count;
  exec["reducer_count"] = report.reducer_count;
  exec["records_emitted"] = report.records_emitted;
  exec["map_time"] = report.times.map_time;
  exec["shuffle_time"] = report.times.shuffle_time;
  exec["reduce_time"] = report.times.reduce_time;
  exec["makespan"] = report.times.makespan;
  exec["empty_layout"] = report.empty_layout;
  j["execution"] = std::move(exec);

  ordered_json traffic;
  traffic["cross_rack_records"] = report.traffic.total_cross_rack;
  ordered_json per_rack = ordered_json::array();
  for (std::size_t i = 0; i < report.traffic.per_rack.size(); ++i) {
    per_rack.push_back({{"rack", i},
                        {"records_out", report.traffic.per_rack[i].records_out},
                        {"records_in", report.traffic.per_rack[i].records_in}});
  }
  traffic["per_rack"] = std::move(per_rack);
  j["traffic"] = std::move(traffic);

  j["eq1"] = {{"per_rack", report.eq1_costs}, {"total", report.eq1_total}};

  ordered_json result;
  result["columns"] = report.result_columns;
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.result_rows) rows.push_back(row);
  result["rows"] = std::move(rows);
  result["row_count"] = report.result_rows.size();
  if (report.count_total) result["count_total"] = *report.count_total;
  if (!report.count_by_key.empty()) {
    ordered_json by_key = ordered_json::array();
    for (const auto& [key, n] : report.count_by_key) {
      by_key.push_back(ordered_json::array({key, n}));
    }
    result["count_by_key"] = std::move(by_key);
  }
  if (report.distinct_count) result["distinct_count"] = *report.distinct_count;
  j["result"] = std::move(result);

  ordered_json mappers = ordered_json::array();
  for (const auto& m : placement.mappers) {
    mappers.push_back(
        {{"id", m.task_id}, {"rack", m.rack}, {"node", m.node}, {"rows", m.rows.size()}});
  }
  ordered_json reducers = ordered_json::array();
  for (const auto& r : placement.reducers) {
    ordered_json entry = {{"id", r.task_id}, {"rack", r.rack}, {"node", r.node}};
    const auto idx = static_cast<std::size_t>(r.task_id);
    if (idx < report.reducer_records_in.size()) {
      entry["records_in"] = report.reducer_records_in[idx];
    }
    reducers.push_back(std::move(entry));
  }
  j["placement"] = {{"mappers", std::move(mappers)}, {"reducers", std::move(reducers)}};

  j["layout"] = layout_json(layout);

  ordered_json log = ordered_json::array();
  for (const auto& t : report.shuffle_log.transfers) {
    log.push_back(ordered_json::array(
        {t.src.rack, t.src.node, t.dst.rack, t.dst.node, t.records}));
  }
  j["shuffle_log"] = std::move(log);
  j["notes"] = report.notes;
  return j.dump(2) + "\n";
}

}  // namespace genmr
