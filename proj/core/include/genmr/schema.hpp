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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace genmr {

// Ordered column list for one table. Column matching is exact and
// case-sensitive; CSV headers are taken verbatim.
struct Schema {
  std::vector<std::string> columns;

  std::optional<std::size_t> index_of(std::string_view name) const;

  // Returns the column index or raises UnknownColumn.
  std::size_t require(std::string_view name) const;

  bool operator==(const Schema&) const = default;
};

}  // namespace genmr
