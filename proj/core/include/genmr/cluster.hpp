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

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "genmr/table.hpp"

namespace genmr {

// Simulated cluster shape: n racks, m datanodes per rack, q rows per node.
struct ClusterTopology {
  int n_racks = 3;
  int m_nodes_per_rack = 12;
  std::size_t q_capacity = 10;

  void validate() const;
  std::size_t total_capacity() const;
};

// IntraRack keeps all data on rack 0; InterRack spreads node-sized blocks
// round-robin across racks.
enum class PartitionMode { IntraRack, InterRack };

// Ceil gives every row a home on its own node (⌈z/q⌉ nodes). FloorCompat
// uses ⌊z/q⌋ nodes (minimum 1 when z > 0) and lets the last node absorb the
// z mod q remainder rows.
enum class RoundingMode { Ceil, FloorCompat };

const char* partition_mode_name(PartitionMode mode);
const char* rounding_mode_name(RoundingMode mode);

struct NodeId {
  int rack = 0;
  int node = 0;

  auto operator<=>(const NodeId&) const = default;
};

struct RowAssignment {
  std::size_t row = 0;
  int rack = 0;
  int node = 0;

  bool operator==(const RowAssignment&) const = default;
};

// Where every table row lives. `assignment` is ordered by row index and
// covers each row exactly once.
struct PartitionLayout {
  PartitionMode mode = PartitionMode::IntraRack;
  RoundingMode rounding = RoundingMode::Ceil;
  ClusterTopology topology;
  std::vector<RowAssignment> assignment;

  // Occupied datanodes in ascending (rack, node) order.
  std::vector<NodeId> occupied_nodes() const;
};

// Number of datanodes (hence mappers) the layout will occupy.
std::size_t required_datanodes(std::size_t z, std::size_t q, RoundingMode rounding);

// Assigns all table rows to datanodes. IntraRack fills rack 0's nodes
// sequentially, q rows per node; InterRack hands out blocks of q rows
// round-robin, block b to rack (b mod n) and the next free node there.
// Raises InsufficientCapacity when the mode's capacity bound excludes z rows.
PartitionLayout partition(const TableData& table, const ClusterTopology& topo,
                          PartitionMode mode, RoundingMode rounding);

// Row indices held by one datanode, ascending; empty when unoccupied.
// Raises IndexOutOfRange for coordinates outside the layout's topology.
std::vector<std::size_t> row_indices_on_node(const PartitionLayout& layout, int rack,
                                             int node);

// Materialized rows held by one datanode, in ascending row-index order.
std::vector<std::vector<std::string>> rows_on_node(const PartitionLayout& layout,
                                                   const TableData& table, int rack,
                                                   int node);

// (node, row count) for every occupied node, ascending by (rack, node).
std::vector<std::pair<NodeId, std::size_t>> node_loads(const PartitionLayout& layout);

}  // namespace genmr
