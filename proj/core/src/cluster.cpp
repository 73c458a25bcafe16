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

#include "genmr/cluster.hpp"

#include <algorithm>
#include <map>

#include "genmr/error.hpp"

namespace genmr {

void ClusterTopology::validate() const {
  if (n_racks < 1) fail(ErrorCode::InsufficientCapacity, "rack count must be >= 1");
  if (m_nodes_per_rack < 1) {
    fail(ErrorCode::InsufficientCapacity, "nodes-per-rack must be >= 1");
  }
  if (q_capacity < 1) fail(ErrorCode::InsufficientCapacity, "node capacity must be >= 1");
}

std::size_t ClusterTopology::total_capacity() const {
  return static_cast<std::size_t>(n_racks) * static_cast<std::size_t>(m_nodes_per_rack) *
         q_capacity;
}

const char* partition_mode_name(PartitionMode mode) {
  return mode == PartitionMode::IntraRack ? "intra" : "inter";
}

const char* rounding_mode_name(RoundingMode mode) {
  return mode == RoundingMode::Ceil ? "ceil" : "floor-compat";
}

std::vector<NodeId> PartitionLayout::occupied_nodes() const {
  std::vector<NodeId> nodes;
  for (const auto& a : assignment) nodes.push_back({a.rack, a.node});
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

std::size_t required_datanodes(std::size_t z, std::size_t q, RoundingMode rounding) {
  if (z == 0) return 0;
  if (rounding == RoundingMode::Ceil) return (z + q - 1) / q;
  return std::max<std::size_t>(1, z / q);
}

PartitionLayout partition(const TableData& table, const ClusterTopology& topo,
                          PartitionMode mode, RoundingMode rounding) {
  topo.validate();
  const std::size_t z = table.rows.size();
  const std::size_t limit = mode == PartitionMode::IntraRack
                                ? static_cast<std::size_t>(topo.m_nodes_per_rack) * topo.q_capacity
                                : topo.total_capacity();
  if (z > limit) {
    fail(ErrorCode::InsufficientCapacity,
         std::string(partition_mode_name(mode)) + " layout holds at most " +
             std::to_string(limit) + " rows; " + std::to_string(z - limit) +
             " of " + std::to_string(z) + " rows do not fit");
  }

  PartitionLayout layout;
  layout.mode = mode;
  layout.rounding = rounding;
  layout.topology = topo;
  if (z == 0) return layout;

  const std::size_t blocks = required_datanodes(z, topo.q_capacity, rounding);
  layout.assignment.reserve(z);
  std::vector<int> next_node_on_rack(static_cast<std::size_t>(topo.n_racks), 0);
  std::size_t row = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    std::size_t take = std::min(topo.q_capacity, z - row);
    if (rounding == RoundingMode::FloorCompat && b + 1 == blocks) {
      take = z - row;  // last node absorbs the z mod q remainder
    }
    int rack = 0;
    int node = 0;
    if (mode == PartitionMode::IntraRack) {
      node = static_cast<int>(b);
    } else {
      rack = static_cast<int>(b % static_cast<std::size_t>(topo.n_racks));
      node = next_node_on_rack[static_cast<std::size_t>(rack)]++;
    }
    for (std::size_t i = 0; i < take; ++i, ++row) {
      layout.assignment.push_back({row, rack, node});
    }
  }
  return layout;
}

namespace {

void check_bounds(const PartitionLayout& layout, int rack, int node) {
  if (rack < 0 || rack >= layout.topology.n_racks || node < 0 ||
      node >= layout.topology.m_nodes_per_rack) {
    fail(ErrorCode::IndexOutOfRange,
         "datanode (" + std::to_string(rack) + "," + std::to_string(node) +
             ") is outside a " + std::to_string(layout.topology.n_racks) + "x" +
             std::to_string(layout.topology.m_nodes_per_rack) + " cluster");
  }
}

}  // namespace

std::vector<std::size_t> row_indices_on_node(const PartitionLayout& layout, int rack,
                                             int node) {
  check_bounds(layout, rack, node);
  std::vector<std::size_t> rows;
  for (const auto& a : layout.assignment) {
    if (a.rack == rack && a.node == node) rows.push_back(a.row);
  }
  return rows;
}

std::vector<std::vector<std::string>> rows_on_node(const PartitionLayout& layout,
                                                   const TableData& table, int rack,
                                                   int node) {
  std::vector<std::vector<std::string>> out;
  for (std::size_t idx : row_indices_on_node(layout, rack, node)) {
    out.push_back(table.rows.at(idx));
  }
  return out;
}

std::vector<std::pair<NodeId, std::size_t>> node_loads(const PartitionLayout& layout) {
  std::map<NodeId, std::size_t> counts;
  for (const auto& a : layout.assignment) ++counts[{a.rack, a.node}];
  return {counts.begin(), counts.end()};
}

}  // namespace genmr
