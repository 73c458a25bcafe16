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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genmr/placement.hpp"
#include "genmr/plan.hpp"
#include "genmr/shuffle_log.hpp"
#include "genmr/table.hpp"

namespace genmr {

// One mapper emission. `row` holds the non-key fields when the plan's
// value_spec is RestOfRow and stays empty for Value=1 plans. source_row is
// the original table row index; it gives sort ties a stable, schedule-free
// order.
struct KeyValue {
  std::string key;
  std::vector<std::string> row;
  std::uint64_t source_row = 0;

  bool operator==(const KeyValue&) const = default;
};

// Simulated per-record and per-task costs in integer milli-units. All
// timing arithmetic is integral so runs are bit-identical across platforms.
struct CostModel {
  std::uint64_t t_map = 1000;
  std::uint64_t t_reduce = 1000;
  std::uint64_t t_intra = 500;
  std::uint64_t t_inter = 5000;
  std::uint64_t t_local = 0;
  std::uint64_t t_start = 2000;

  // True when costs respect network distance (t_inter >= t_intra >= t_local).
  bool is_meaningful() const { return t_inter >= t_intra && t_intra >= t_local; }

  bool operator==(const CostModel&) const = default;
};

struct PhaseTimes {
  std::uint64_t map_time = 0;
  std::uint64_t shuffle_time = 0;
  std::uint64_t reduce_time = 0;
  std::uint64_t makespan = 0;

  bool operator==(const PhaseTimes&) const = default;
};

// Key-grouped input of one reducer; keys ascend, values keep
// (mapper task_id, emission order).
using ReducerGroup = std::map<std::string, std::vector<KeyValue>>;

struct ShuffleResult {
  std::vector<ReducerGroup> groups;  // indexed by reducer task_id
  ShuffleLog log;
};

// Output of a single reducer task.
struct ReduceOutput {
  std::vector<std::vector<std::string>> rows;
  std::map<std::string, std::uint64_t> counts;  // Sum and GroupCount per key
  std::vector<std::string> distinct_keys;       // DistinctSet, ascending
  std::uint64_t records_in = 0;
};

struct ExecutionReport {
  std::vector<std::string> result_columns;
  std::vector<std::vector<std::string>> result_rows;
  PhaseTimes times;
  RackTraffic traffic;
  std::vector<std::uint64_t> eq1_costs;  // per rack
  std::uint64_t eq1_total = 0;
  std::size_t mapper_count = 0;
  std::size_t reducer_count = 0;
  std::uint64_t records_emitted = 0;
  std::vector<std::uint64_t> reducer_records_in;  // indexed by reducer task_id
  std::optional<std::uint64_t> count_total;
  std::vector<std::pair<std::string, std::uint64_t>> count_by_key;
  std::optional<std::uint64_t> distinct_count;
  ShuffleLog shuffle_log;
  std::vector<std::string> notes;
  bool empty_layout = false;

  bool operator==(const ExecutionReport&) const = default;
};

// FNV-1a 64-bit over the bytes of `data` (offset basis
// 14695981039346656037, prime 1099511628211, wrapping arithmetic).
std::uint64_t fnv1a64(std::string_view data);

// Reducer index for a key: fnv1a64(key) mod r_count.
std::size_t assign_reducer(std::string_view key, std::size_t r_count);

// Map phase for one mapper: scans the given rows, drops rows failing the
// plan's filter, and emits one KeyValue per surviving row.
std::vector<KeyValue> run_map(const MapReducePlan& plan, const TableData& table,
                              const std::vector<std::size_t>& row_indices);

// Routes all emissions to reducers and logs every node-to-node channel.
// Emissions are consumed mapper by mapper in task_id order so grouped
// values carry a deterministic order.
ShuffleResult shuffle(const std::vector<std::vector<KeyValue>>& emissions,
                      const PlacementPlan& placement);

// Reduce phase for one reducer's grouped input.
ReduceOutput run_reduce(const MapReducePlan& plan, const ReducerGroup& group);

// Phase timing under strict barriers: map and reduce are the max over their
// tasks of t_start + records * unit cost; shuffle is the max over channels
// of records * distance cost; makespan is the sum of the three.
PhaseTimes simulate_time(const PlacementPlan& placement, const ShuffleLog& log,
                         const std::vector<std::uint64_t>& records_per_reducer,
                         const CostModel& cost);

struct ExecuteOptions {
  int threads = 1;
  // Drops one shuffled record before reducing; exists so the verification
  // path can prove it detects mismatches.
  bool inject_drop_record = false;
};

// Full pipeline: per-mapper map (parallelized), shuffle, per-reducer reduce
// (parallelized), global assembly, timing, and traffic accounting. Output
// is byte-stable for any thread count.
ExecutionReport execute(const MapReducePlan& plan, const TableData& table,
                        const PartitionLayout& layout, const PlacementPlan& placement,
                        const CostModel& cost, const ExecuteOptions& options = {});

// ASCII-only uppercase; bytes outside a-z pass through unchanged.
std::string ascii_upper(std::string_view s);

// 1-based substring clamped at the string end; start past the end gives "".
// Raises SubstringOutOfRange when start < 1.
std::string substring_1based(const std::string& s, int start, int len);

}  // namespace genmr
