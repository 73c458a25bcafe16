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

#include "genmr/executor.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include "genmr/error.hpp"

namespace genmr {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char byte : data) {
    hash ^= byte;
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::size_t assign_reducer(std::string_view key, std::size_t r_count) {
  if (r_count < 1) fail(ErrorCode::StrategyInfeasible, "reducer count must be >= 1");
  return static_cast<std::size_t>(fnv1a64(key) % r_count);
}

std::string ascii_upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  }
  return out;
}

std::string substring_1based(const std::string& s, int start, int len) {
  if (start < 1) {
    fail(ErrorCode::SubstringOutOfRange,
         "substring start " + std::to_string(start) + " is before position 1");
  }
  if (len < 0) {
    fail(ErrorCode::SubstringOutOfRange, "substring length is negative");
  }
  const std::size_t begin = static_cast<std::size_t>(start) - 1;
  if (begin >= s.size()) return "";
  return s.substr(begin, static_cast<std::size_t>(len));
}

namespace {

bool term_matches(const PredicateTerm& term, const std::vector<std::string>& row,
                  const Schema& schema) {
  return row.at(schema.require(term.column)) == term.literal;
}

bool row_passes(const std::optional<Predicate>& filter, const std::vector<std::string>& row,
                const Schema& schema) {
  if (!filter) return true;
  const bool first = term_matches(filter->terms[0], row, schema);
  switch (filter->connective) {
    case Connective::None: return first;
    case Connective::And: return first && term_matches(filter->terms[1], row, schema);
    case Connective::Or: return first || term_matches(filter->terms[1], row, schema);
  }
  return first;
}

// Runs fn(0..count-1) over `threads` workers with a static stride so every
// output slot is owned by exactly one worker.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn) {
  if (count == 0) return;
  const std::size_t workers =
      std::min<std::size_t>(count, threads < 1 ? 1 : static_cast<std::size_t>(threads));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::mutex error_mutex;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

bool key_before(const KeyValue& a, const KeyValue& b, SortDirection dir) {
  if (a.key != b.key) {
    return dir == SortDirection::Asc ? a.key < b.key : a.key > b.key;
  }
  return a.source_row < b.source_row;
}

// Appends the per-record result rows for one key group; shared by the
// per-reducer reduce and the global assembly so they cannot diverge.
void emit_group_rows(const MapReducePlan& plan, const std::string& key,
                     const std::vector<KeyValue>& values,
                     std::vector<std::vector<std::string>>& rows) {
  switch (plan.reduce_op) {
    case ReduceOp::Collect:
      for (const KeyValue& kv : values) {
        std::vector<std::string> row;
        row.reserve(kv.row.size() + 1);
        row.push_back(key);
        row.insert(row.end(), kv.row.begin(), kv.row.end());
        rows.push_back(std::move(row));
      }
      break;
    case ReduceOp::UpperPerRow:
      for (std::size_t i = 0; i < values.size(); ++i) rows.push_back({ascii_upper(key)});
      break;
    case ReduceOp::SubstringPerRow: {
      const std::string piece = substring_1based(key, plan.substr_start, plan.substr_len);
      for (std::size_t i = 0; i < values.size(); ++i) rows.push_back({piece});
      break;
    }
    default:
      break;
  }
}

std::vector<std::vector<std::string>> sorted_rows(const MapReducePlan& plan,
                                                  std::vector<KeyValue> kvs) {
  std::sort(kvs.begin(), kvs.end(), [&plan](const KeyValue& a, const KeyValue& b) {
    return key_before(a, b, plan.sort_direction);
  });
  std::vector<std::vector<std::string>> rows;
  rows.reserve(kvs.size());
  for (KeyValue& kv : kvs) {
    std::vector<std::string> row;
    row.reserve(kv.row.size() + 1);
    row.push_back(std::move(kv.key));
    row.insert(row.end(), std::make_move_iterator(kv.row.begin()),
               std::make_move_iterator(kv.row.end()));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<KeyValue> run_map(const MapReducePlan& plan, const TableData& table,
                              const std::vector<std::size_t>& row_indices) {
  const std::size_t key_idx = table.schema.require(plan.key_column);
  if (plan.map_filter) {
    for (const auto& term : plan.map_filter->terms) table.schema.require(term.column);
  }
  std::vector<KeyValue> out;
  for (std::size_t idx : row_indices) {
    const auto& row = table.rows.at(idx);
    if (!row_passes(plan.map_filter, row, table.schema)) continue;
    KeyValue kv;
    kv.key = row[key_idx];
    kv.source_row = idx;
    if (plan.value_spec == ValueSpec::RestOfRow) {
      kv.row.reserve(row.size() - 1);
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c != key_idx) kv.row.push_back(row[c]);
      }
    }
    out.push_back(std::move(kv));
  }
  return out;
}

ShuffleResult shuffle(const std::vector<std::vector<KeyValue>>& emissions,
                      const PlacementPlan& placement) {
  if (emissions.size() != placement.mappers.size()) {
    throw std::logic_error("shuffle: one emission list per mapper required");
  }
  const std::size_t r_count = placement.reducers.size();
  ShuffleResult result;
  result.groups.resize(r_count);
  std::map<std::pair<NodeId, NodeId>, std::uint64_t> channels;
  for (std::size_t m = 0; m < emissions.size(); ++m) {
    const NodeId src{placement.mappers[m].rack, placement.mappers[m].node};
    for (const KeyValue& kv : emissions[m]) {
      const std::size_t r = assign_reducer(kv.key, r_count);
      const NodeId dst{placement.reducers[r].rack, placement.reducers[r].node};
      result.groups[r][kv.key].push_back(kv);
      ++channels[{src, dst}];
    }
  }
  for (const auto& [route, records] : channels) {
    result.log.transfers.push_back({route.first, route.second, records});
  }
  return result;
}

ReduceOutput run_reduce(const MapReducePlan& plan, const ReducerGroup& group) {
  ReduceOutput out;
  for (const auto& [key, values] : group) out.records_in += values.size();
  switch (plan.reduce_op) {
    case ReduceOp::Sum:
    case ReduceOp::GroupCount:
      for (const auto& [key, values] : group) {
        out.counts[key] = values.size();
        out.rows.push_back({key, std::to_string(values.size())});
      }
      break;
    case ReduceOp::DistinctSet:
      for (const auto& [key, values] : group) {
        out.distinct_keys.push_back(key);
        out.rows.push_back({key});
      }
      break;
    case ReduceOp::Collect:
    case ReduceOp::UpperPerRow:
    case ReduceOp::SubstringPerRow:
      for (const auto& [key, values] : group) emit_group_rows(plan, key, values, out.rows);
      break;
    case ReduceOp::SortByKey: {
      std::vector<KeyValue> kvs;
      for (const auto& [key, values] : group) {
        kvs.insert(kvs.end(), values.begin(), values.end());
      }
      out.rows = sorted_rows(plan, std::move(kvs));
      break;
    }
  }
  return out;
}

PhaseTimes simulate_time(const PlacementPlan& placement, const ShuffleLog& log,
                         const std::vector<std::uint64_t>& records_per_reducer,
                         const CostModel& cost) {
  PhaseTimes times;
  for (const auto& m : placement.mappers) {
    const std::uint64_t t = cost.t_start + static_cast<std::uint64_t>(m.rows.size()) * cost.t_map;
    times.map_time = std::max(times.map_time, t);
  }
  for (const auto& t : log.transfers) {
    std::uint64_t per_record = cost.t_inter;
    if (t.src == t.dst) {
      per_record = cost.t_local;
    } else if (t.src.rack == t.dst.rack) {
      per_record = cost.t_intra;
    }
    times.shuffle_time = std::max(times.shuffle_time, t.records * per_record);
  }
  for (const auto& r : placement.reducers) {
    const std::uint64_t in = static_cast<std::size_t>(r.task_id) < records_per_reducer.size()
                                 ? records_per_reducer[static_cast<std::size_t>(r.task_id)]
                                 : 0;
    times.reduce_time = std::max(times.reduce_time, cost.t_start + in * cost.t_reduce);
  }
  times.makespan = times.map_time + times.shuffle_time + times.reduce_time;
  return times;
}

namespace {

std::vector<std::string> result_columns_for(const MapReducePlan& plan,
                                            const Schema& schema) {
  switch (plan.reduce_op) {
    case ReduceOp::Collect:
    case ReduceOp::SortByKey: {
      std::vector<std::string> cols{plan.key_column};
      for (const auto& c : schema.columns) {
        if (c != plan.key_column) cols.push_back(c);
      }
      return cols;
    }
    case ReduceOp::Sum:
      return {"count(" + plan.key_column + ")"};
    case ReduceOp::DistinctSet:
      return {plan.key_column};
    case ReduceOp::UpperPerRow:
      return {"upper(" + plan.key_column + ")"};
    case ReduceOp::SubstringPerRow:
      return {"substring(" + plan.key_column + "," + std::to_string(plan.substr_start) +
              "," + std::to_string(plan.substr_len) + ")"};
    case ReduceOp::GroupCount:
      return {plan.key_column, "count"};
  }
  return {};
}

}  // namespace

ExecutionReport execute(const MapReducePlan& plan, const TableData& table,
                        const PartitionLayout& layout, const PlacementPlan& placement,
                        const CostModel& cost, const ExecuteOptions& options) {
  ExecutionReport report;
  report.mapper_count = placement.mappers.size();
  report.reducer_count = placement.reducers.size();
  report.empty_layout = placement.empty_layout;
  report.result_columns = result_columns_for(plan, table.schema);

  std::vector<std::vector<KeyValue>> emissions(placement.mappers.size());
  parallel_for(placement.mappers.size(), options.threads, [&](std::size_t i) {
    emissions[i] = run_map(plan, table, placement.mappers[i].rows);
  });
  for (const auto& e : emissions) report.records_emitted += e.size();

  ShuffleResult shuffled = shuffle(emissions, placement);
  std::uint64_t logged = 0;
  for (const auto& t : shuffled.log.transfers) logged += t.records;
  std::uint64_t grouped = 0;
  for (const auto& g : shuffled.groups) {
    for (const auto& [key, values] : g) grouped += values.size();
  }
  if (logged != report.records_emitted || grouped != report.records_emitted) {
    throw std::logic_error("shuffle conservation violated");
  }

  if (options.inject_drop_record) {
    for (auto& g : shuffled.groups) {
      if (g.empty()) continue;
      auto& values = g.begin()->second;
      values.erase(values.begin());
      if (values.empty()) g.erase(g.begin());
      report.notes.push_back("fault injection: dropped one shuffled record");
      break;
    }
  }

  std::vector<ReduceOutput> outputs(shuffled.groups.size());
  parallel_for(shuffled.groups.size(), options.threads, [&](std::size_t r) {
    outputs[r] = run_reduce(plan, shuffled.groups[r]);
  });

  // Global assembly. Reducers own disjoint key ranges, so merging their
  // key-grouped inputs restores one globally key-ordered view.
  switch (plan.reduce_op) {
    case ReduceOp::Sum: {
      std::map<std::string, std::uint64_t> merged;
      for (const auto& o : outputs) merged.insert(o.counts.begin(), o.counts.end());
      std::uint64_t total = 0;
      for (const auto& [key, n] : merged) {
        report.count_by_key.emplace_back(key, n);
        total += n;
      }
      report.count_total = total;
      if (total > 0) report.result_rows.push_back({std::to_string(total)});
      break;
    }
    case ReduceOp::GroupCount: {
      std::map<std::string, std::uint64_t> merged;
      for (const auto& o : outputs) merged.insert(o.counts.begin(), o.counts.end());
      for (const auto& [key, n] : merged) {
        report.count_by_key.emplace_back(key, n);
        report.result_rows.push_back({key, std::to_string(n)});
      }
      break;
    }
    case ReduceOp::DistinctSet: {
      std::vector<std::string> keys;
      for (const auto& o : outputs) {
        keys.insert(keys.end(), o.distinct_keys.begin(), o.distinct_keys.end());
      }
      std::sort(keys.begin(), keys.end());
      report.distinct_count = keys.size();
      for (auto& k : keys) report.result_rows.push_back({std::move(k)});
      break;
    }
    case ReduceOp::Collect:
    case ReduceOp::UpperPerRow:
    case ReduceOp::SubstringPerRow: {
      std::map<std::string, const std::vector<KeyValue>*> merged;
      for (const auto& g : shuffled.groups) {
        for (const auto& [key, values] : g) merged.emplace(key, &values);
      }
      for (const auto& [key, values] : merged) {
        emit_group_rows(plan, key, *values, report.result_rows);
      }
      break;
    }
    case ReduceOp::SortByKey: {
      std::vector<KeyValue> kvs;
      for (const auto& g : shuffled.groups) {
        for (const auto& [key, values] : g) {
          kvs.insert(kvs.end(), values.begin(), values.end());
        }
      }
      report.result_rows = sorted_rows(plan, std::move(kvs));
      break;
    }
  }

  std::vector<std::uint64_t> records_per_reducer(outputs.size(), 0);
  for (std::size_t r = 0; r < outputs.size(); ++r) {
    records_per_reducer[r] = outputs[r].records_in;
  }
  report.reducer_records_in = records_per_reducer;
  report.times = simulate_time(placement, shuffled.log, records_per_reducer, cost);
  report.traffic = rack_traffic(shuffled.log, layout.topology);
  report.eq1_costs = eq1_per_rack(placement, layout.topology);
  for (std::uint64_t c : report.eq1_costs) report.eq1_total += c;
  report.shuffle_log = std::move(shuffled.log);

  if (plan.form == 0) {
    report.notes.push_back("bare star projection accepted as an extension");
  }
  if (report.empty_layout) {
    report.notes.push_back("empty input: zero mappers placed");
  }
  if (!cost.is_meaningful()) {
    report.notes.push_back("cost model does not satisfy t_inter >= t_intra >= t_local");
  }
  report.notes.push_back("rack cost f=m*d*r uses occupied-datanode counts for d");
  report.notes.push_back(
      "timing is simulated: max per phase with strict barriers, startup charged per task");
  return report;
}

}  // namespace genmr
