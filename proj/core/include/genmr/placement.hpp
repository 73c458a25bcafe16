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
#include <vector>

#include "genmr/cluster.hpp"
#include "genmr/shuffle_log.hpp"

namespace genmr {

// Where reducers run relative to the mappers' datanodes:
//  - Colocated: on mapper nodes themselves.
//  - IntraRackReducer: on mapper racks but on nodes free of mappers.
//  - InterRackReducer: on racks carrying no mappers.
enum class PlacementStrategy { Colocated, IntraRackReducer, InterRackReducer };

const char* placement_strategy_name(PlacementStrategy s);

struct MapperTask {
  int task_id = 0;
  int rack = 0;
  int node = 0;
  std::vector<std::size_t> rows;

  bool operator==(const MapperTask&) const = default;
};

struct ReducerTask {
  int task_id = 0;
  int rack = 0;
  int node = 0;

  bool operator==(const ReducerTask&) const = default;
};

struct PlacementPlan {
  PlacementStrategy strategy = PlacementStrategy::Colocated;
  std::vector<MapperTask> mappers;
  std::vector<ReducerTask> reducers;
  bool empty_layout = false;  // true when z=0 left zero mappers

  bool operator==(const PlacementPlan&) const = default;
};

// One data-local mapper per occupied datanode, task ids ascending in
// (rack, node) order. An empty layout yields an empty list.
std::vector<MapperTask> place_mappers(const PartitionLayout& layout);

// Places r_count reducers under the strategy. Eligible nodes are taken in
// ascending (rack, node) order and reused round-robin when r_count exceeds
// them. When a strategy's preferred tier is exhausted (no mapper-free node
// or rack exists) placement falls back to the nearest weaker tier rather
// than failing; only InterRackReducer on a single-rack topology is
// unsatisfiable in principle and raises StrategyInfeasible.
std::vector<ReducerTask> place_reducers(PlacementStrategy strategy,
                                        const ClusterTopology& topo,
                                        const std::vector<MapperTask>& mappers,
                                        int r_count);

// place_mappers + place_reducers in one plan.
PlacementPlan build_placement(const PartitionLayout& layout, PlacementStrategy strategy,
                              int r_count);

// The literal rack-cost product m_i * d_i * r_i.
std::uint64_t eq1_cost(std::uint64_t m_i, std::uint64_t d_i, std::uint64_t r_i);

// eq1_cost evaluated per rack with m_i = mappers on rack i, d_i = occupied
// datanodes on rack i, r_i = reducers on rack i.
std::vector<std::uint64_t> eq1_per_rack(const PlacementPlan& plan,
                                        const ClusterTopology& topo);

struct RackFlow {
  std::uint64_t records_out = 0;
  std::uint64_t records_in = 0;

  bool operator==(const RackFlow&) const = default;
};

struct RackTraffic {
  std::vector<RackFlow> per_rack;  // indexed by rack
  std::uint64_t total_cross_rack = 0;

  bool operator==(const RackTraffic&) const = default;
};

// Counts cross-rack shuffle records per rack. Node-local and rack-local
// transfers contribute nothing.
RackTraffic rack_traffic(const ShuffleLog& log, const ClusterTopology& topo);

}  // namespace genmr
