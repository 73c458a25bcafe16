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

#include "genmr/placement.hpp"

#include <algorithm>
#include <set>

#include "genmr/error.hpp"

namespace genmr {

const char* placement_strategy_name(PlacementStrategy s) {
  switch (s) {
    case PlacementStrategy::Colocated: return "colocated";
    case PlacementStrategy::IntraRackReducer: return "intra-rack-reducer";
    case PlacementStrategy::InterRackReducer: return "inter-rack-reducer";
  }
  return "colocated";
}

std::vector<MapperTask> place_mappers(const PartitionLayout& layout) {
  std::vector<MapperTask> mappers;
  int next_id = 0;
  for (const NodeId& node : layout.occupied_nodes()) {
    MapperTask task;
    task.task_id = next_id++;
    task.rack = node.rack;
    task.node = node.node;
    task.rows = row_indices_on_node(layout, node.rack, node.node);
    mappers.push_back(std::move(task));
  }
  return mappers;
}

namespace {

std::vector<NodeId> eligible_nodes(PlacementStrategy strategy, const ClusterTopology& topo,
                                   const std::vector<MapperTask>& mappers) {
  std::set<NodeId> mapper_nodes;
  std::set<int> mapper_racks;
  for (const auto& m : mappers) {
    mapper_nodes.insert({m.rack, m.node});
    mapper_racks.insert(m.rack);
  }
  const std::vector<NodeId> mapper_node_list(mapper_nodes.begin(), mapper_nodes.end());

  auto free_nodes_on_mapper_racks = [&] {
    std::vector<NodeId> out;
    for (int rack : mapper_racks) {
      for (int node = 0; node < topo.m_nodes_per_rack; ++node) {
        if (!mapper_nodes.count({rack, node})) out.push_back({rack, node});
      }
    }
    return out;
  };
  auto mapper_free_rack_nodes = [&] {
    std::vector<NodeId> out;
    for (int rack = 0; rack < topo.n_racks; ++rack) {
      if (mapper_racks.count(rack)) continue;
      for (int node = 0; node < topo.m_nodes_per_rack; ++node) out.push_back({rack, node});
    }
    return out;
  };
  auto free_nodes_anywhere = [&] {
    std::vector<NodeId> out;
    for (int rack = 0; rack < topo.n_racks; ++rack) {
      for (int node = 0; node < topo.m_nodes_per_rack; ++node) {
        if (!mapper_nodes.count({rack, node})) out.push_back({rack, node});
      }
    }
    return out;
  };

  // Each strategy prefers its own tier and degrades to the nearest weaker
  // one instead of failing; strategies only fail when unsatisfiable in
  // principle (inter-rack on a single rack).
  std::vector<std::vector<NodeId>> tiers;
  switch (strategy) {
    case PlacementStrategy::Colocated:
      tiers.push_back(mapper_node_list);
      break;
    case PlacementStrategy::IntraRackReducer:
      tiers.push_back(free_nodes_on_mapper_racks());
      tiers.push_back(mapper_node_list);
      break;
    case PlacementStrategy::InterRackReducer:
      if (topo.n_racks < 2) {
        fail(ErrorCode::StrategyInfeasible,
             "inter-rack-reducer needs at least 2 racks; topology has 1");
      }
      tiers.push_back(mapper_free_rack_nodes());
      tiers.push_back(free_nodes_anywhere());
      tiers.push_back(mapper_node_list);
      break;
  }
  for (auto& tier : tiers) {
    if (!tier.empty()) return std::move(tier);
  }
  return {NodeId{0, 0}};
}

}  // namespace

std::vector<ReducerTask> place_reducers(PlacementStrategy strategy,
                                        const ClusterTopology& topo,
                                        const std::vector<MapperTask>& mappers,
                                        int r_count) {
  topo.validate();
  if (r_count < 1) {
    fail(ErrorCode::StrategyInfeasible, "reducer count must be >= 1");
  }
  const std::vector<NodeId> eligible = eligible_nodes(strategy, topo, mappers);
  std::vector<ReducerTask> reducers;
  reducers.reserve(static_cast<std::size_t>(r_count));
  for (int i = 0; i < r_count; ++i) {
    const NodeId& spot = eligible[static_cast<std::size_t>(i) % eligible.size()];
    reducers.push_back({i, spot.rack, spot.node});
  }
  return reducers;
}

PlacementPlan build_placement(const PartitionLayout& layout, PlacementStrategy strategy,
                              int r_count) {
  PlacementPlan plan;
  plan.strategy = strategy;
  plan.mappers = place_mappers(layout);
  plan.empty_layout = plan.mappers.empty();
  plan.reducers = place_reducers(strategy, layout.topology, plan.mappers, r_count);
  return plan;
}

std::uint64_t eq1_cost(std::uint64_t m_i, std::uint64_t d_i, std::uint64_t r_i) {
  return m_i * d_i * r_i;
}

std::vector<std::uint64_t> eq1_per_rack(const PlacementPlan& plan,
                                        const ClusterTopology& topo) {
  std::vector<std::uint64_t> mappers_on(static_cast<std::size_t>(topo.n_racks), 0);
  std::vector<std::set<int>> nodes_on(static_cast<std::size_t>(topo.n_racks));
  std::vector<std::uint64_t> reducers_on(static_cast<std::size_t>(topo.n_racks), 0);
  for (const auto& m : plan.mappers) {
    ++mappers_on[static_cast<std::size_t>(m.rack)];
    nodes_on[static_cast<std::size_t>(m.rack)].insert(m.node);
  }
  for (const auto& r : plan.reducers) ++reducers_on[static_cast<std::size_t>(r.rack)];
  std::vector<std::uint64_t> costs(static_cast<std::size_t>(topo.n_racks), 0);
  for (std::size_t i = 0; i < costs.size(); ++i) {
    costs[i] = eq1_cost(mappers_on[i], nodes_on[i].size(), reducers_on[i]);
  }
  return costs;
}

RackTraffic rack_traffic(const ShuffleLog& log, const ClusterTopology& topo) {
  RackTraffic traffic;
  traffic.per_rack.assign(static_cast<std::size_t>(topo.n_racks), RackFlow{});
  for (const auto& t : log.transfers) {
    if (t.src.rack == t.dst.rack) continue;
    traffic.per_rack.at(static_cast<std::size_t>(t.src.rack)).records_out += t.records;
    traffic.per_rack.at(static_cast<std::size_t>(t.dst.rack)).records_in += t.records;
    traffic.total_cross_rack += t.records;
  }
  return traffic;
}

}  // namespace genmr
