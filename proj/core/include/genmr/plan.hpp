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

#include <optional>
#include <string>
#include <string_view>

#include "genmr/ast.hpp"
#include "genmr/schema.hpp"

namespace genmr {

// What a mapper emits as the value half of each key-value pair.
enum class ValueSpec { One, RestOfRow };

// The reducer operator for a compiled query.
enum class ReduceOp {
  Collect,          // echo rows grouped under their key
  Sum,              // count of 1-values per key, plus a grand total
  DistinctSet,      // sorted distinct keys and their count
  UpperPerRow,      // uppercase the key of every row
  SubstringPerRow,  // substring of the key of every row
  SortByKey,        // rows ordered by key
  GroupCount        // per-key row counts
};

const char* value_spec_name(ValueSpec v);
const char* reduce_op_name(ReduceOp op);

// A single-round map+reduce program: which column keys the map output,
// what the value is, which filter gates rows, and how the reducer folds.
struct MapReducePlan {
  int form = 0;  // query form number (1..19); 0 marks the bare-star extension
  std::string table;
  std::string key_column;
  std::optional<Predicate> map_filter;
  ValueSpec value_spec = ValueSpec::One;
  ReduceOp reduce_op = ReduceOp::Collect;
  int substr_start = 0;
  int substr_len = 0;
  SortDirection sort_direction = SortDirection::Asc;

  bool operator==(const MapReducePlan&) const = default;
};

// Classifies a valid AST into its query form number. Forms 1..19 follow the
// supported catalog (star+where, the four functions bare / with one-term
// where / with AND / with OR, star+order-by, grouped count); 0 is the
// accepted bare `SELECT *` extension.
int classify_form(const QueryAst& ast);

// Stable lower-case name for a form number, e.g. 6 -> "count_where".
const char* form_name(int form);

// Translates an AST into its plan against a bound table schema.
// Raises UnknownTable when table_name differs from ast.table and
// UnknownColumn when any referenced column is absent from the schema.
MapReducePlan compile(const QueryAst& ast, std::string_view table_name,
                      const Schema& schema);

// One-line plan summary, e.g. "key=State value=1 reduce=SUM filter=∅".
std::string describe_plan(const MapReducePlan& plan);

// Renders a predicate as it appears in filter summaries,
// e.g. "State='Assam' AND School_Type='Primary School'".
std::string render_predicate(const Predicate& pred);

}  // namespace genmr
