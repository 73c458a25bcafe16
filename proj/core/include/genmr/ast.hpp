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
#include <vector>

namespace genmr {

// The four accepted query-syntax flavors. They differ only in which function
// aliases they admit; every flavor parses into the same QueryAst.
enum class Dialect { Sql, MySql, Oracle, Db2 };

const char* dialect_name(Dialect d);
std::optional<Dialect> dialect_from_name(std::string_view name);

enum class FuncKind { Count, Distinct, Upper, Substring };

const char* func_kind_name(FuncKind k);

struct PredicateTerm {
  std::string column;
  std::string literal;
  bool operator==(const PredicateTerm&) const = default;
};

enum class Connective { None, And, Or };

// Either a single term (connective None) or exactly two terms joined by
// AND/OR. Nothing deeper is representable.
struct Predicate {
  std::vector<PredicateTerm> terms;
  Connective connective = Connective::None;
  bool operator==(const Predicate&) const = default;
};

enum class SortDirection { Asc, Desc };

struct OrderBy {
  std::string column;
  SortDirection direction = SortDirection::Asc;
  bool operator==(const OrderBy&) const = default;
};

enum class ProjectionKind { Star, Func, GroupCount };

// Dialect-neutral parse result. `column` is the function argument for Func
// projections and the grouped column for GroupCount; it is empty for Star.
struct QueryAst {
  ProjectionKind projection = ProjectionKind::Star;
  FuncKind func = FuncKind::Count;  // meaningful only when projection == Func
  std::string column;
  int substr_start = 0;  // 1-based; set only for Substring
  int substr_len = 0;    // set only for Substring
  std::string table;
  std::optional<Predicate> predicate;
  std::optional<OrderBy> order_by;
  std::optional<std::string> group_by;

  bool operator==(const QueryAst&) const = default;

  // Throws Error if any structural invariant is broken: predicate shape,
  // substring bounds, order_by only on unfiltered Star, group_by only on
  // GroupCount naming the same column.
  void validate() const;
};

}  // namespace genmr
