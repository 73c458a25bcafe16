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

namespace genmr {

// One mapper-node to reducer-node channel and how many records crossed it.
struct ShuffleTransfer {
  NodeId src;
  NodeId dst;
  std::uint64_t records = 0;

  bool operator==(const ShuffleTransfer&) const = default;
};

// Channel-aggregated record of an entire shuffle, ordered by (src, dst).
struct ShuffleLog {
  std::vector<ShuffleTransfer> transfers;

  bool operator==(const ShuffleLog&) const = default;
};

}  // namespace genmr
