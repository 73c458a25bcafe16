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
#include <vector>

#include "genmr/ast.hpp"
#include "genmr/table.hpp"

namespace genmr {

// Result family of a directly evaluated query.
enum class OracleKind {
  Rows,       // filtered rows, key column first
  Count,      // single grand total
  Distinct,   // sorted distinct values
  Upper,      // per-row uppercased values
  Substring,  // per-row substrings
  Ordered,    // all rows sorted by a column
  GroupCount  // (value, count) pairs sorted by value
};

struct OracleResult {
  OracleKind kind = OracleKind::Rows;
  std::vector<std::vector<std::string>> rows;
};

// Single-pass in-memory evaluation of the query over the table. This is the
// ground truth the distributed execution is checked against; it shares no
// cluster, placement, or executor code.
OracleResult eval(const QueryAst& ast, const TableData& table);

// True when the query's result order is part of its contract (ORDER BY and
// DISTINCT); such results are compared as sequences, all others as multisets.
bool ordered_comparison(const QueryAst& ast);

struct DiffReport {
  bool match = true;
  bool ordered = false;
  std::vector<std::string> mismatches;
};

// Compares oracle rows against executed rows, as sequences when ordered,
// otherwise as multisets. Mismatch lines name the first divergence.
DiffReport diff(const OracleResult& oracle,
                const std::vector<std::vector<std::string>>& actual, bool ordered);

}  // namespace genmr
