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

#include <string>

#include "genmr/executor.hpp"

namespace genmr {

// Everything the report echoes about how a run was configured. Worker
// thread count is deliberately absent: reports must be byte-identical for
// any thread count.
struct RunEcho {
  std::string query;  // canonical rendering
  std::string dialect;
  std::string table;
  std::string csv_path;  // "<fixture>" when synthesized
  int racks = 3;
  int nodes_per_rack = 12;
  std::size_t capacity = 10;
  std::string mode;
  std::string strategy;
  std::string rounding;
  int reducers = 1;
  CostModel cost;
  int form = 0;
  std::string form_name;
  std::string plan_summary;
};

// Serializes a layout as {"mode":..., "rounding":..., "assignment":
// [[row, rack, node], ...]} with stable key order.
std::string layout_to_json(const PartitionLayout& layout);

// Full run report as pretty-printed JSON with stable key order; the schema
// is documented in docs/report.schema.json.
std::string report_to_json(const RunEcho& echo, const ExecutionReport& report,
                           const PartitionLayout& layout,
                           const PlacementPlan& placement);

}  // namespace genmr
