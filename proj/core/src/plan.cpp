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

#include "genmr/plan.hpp"

#include "genmr/error.hpp"

namespace genmr {

const char* value_spec_name(ValueSpec v) {
  return v == ValueSpec::One ? "1" : "rest";
}

const char* reduce_op_name(ReduceOp op) {
  switch (op) {
    case ReduceOp::Collect: return "COLLECT";
    case ReduceOp::Sum: return "SUM";
    case ReduceOp::DistinctSet: return "DISTINCT";
    case ReduceOp::UpperPerRow: return "UPPER";
    case ReduceOp::SubstringPerRow: return "SUBSTRING";
    case ReduceOp::SortByKey: return "ORDER";
    case ReduceOp::GroupCount: return "GROUPCOUNT";
  }
  return "COLLECT";
}

int classify_form(const QueryAst& ast) {
  if (ast.projection == ProjectionKind::GroupCount) return 19;
  if (ast.projection == ProjectionKind::Star) {
    if (ast.order_by) return 18;
    return ast.predicate ? 1 : 0;
  }
  // Function projections: bare 2..5, one-term where 6..9, AND 10..13, OR 14..17.
  int offset = 0;
  switch (ast.func) {
    case FuncKind::Count: offset = 0; break;
    case FuncKind::Distinct: offset = 1; break;
    case FuncKind::Upper: offset = 2; break;
    case FuncKind::Substring: offset = 3; break;
  }
  if (!ast.predicate) return 2 + offset;
  switch (ast.predicate->connective) {
    case Connective::None: return 6 + offset;
    case Connective::And: return 10 + offset;
    case Connective::Or: return 14 + offset;
  }
  return 6 + offset;
}

const char* form_name(int form) {
  switch (form) {
    case 0: return "star";
    case 1: return "star_where";
    case 2: return "count";
    case 3: return "distinct";
    case 4: return "upper";
    case 5: return "substring";
    case 6: return "count_where";
    case 7: return "distinct_where";
    case 8: return "upper_where";
    case 9: return "substring_where";
    case 10: return "count_where_and";
    case 11: return "distinct_where_and";
    case 12: return "upper_where_and";
    case 13: return "substring_where_and";
    case 14: return "count_where_or";
    case 15: return "distinct_where_or";
    case 16: return "upper_where_or";
    case 17: return "substring_where_or";
    case 18: return "star_orderby";
    case 19: return "groupby_count";
    default: return "unknown";
  }
}

MapReducePlan compile(const QueryAst& ast, std::string_view table_name,
                      const Schema& schema) {
  ast.validate();
  if (ast.table != table_name) {
    fail(ErrorCode::UnknownTable, "query targets '" + ast.table + "' but the bound table is '" +
                                      std::string(table_name) + "'");
  }
  MapReducePlan plan;
  plan.form = classify_form(ast);
  plan.table = ast.table;
  if (ast.predicate) {
    for (const auto& term : ast.predicate->terms) schema.require(term.column);
    plan.map_filter = ast.predicate;
  }
  switch (ast.projection) {
    case ProjectionKind::Star:
      if (ast.order_by) {
        schema.require(ast.order_by->column);
        plan.key_column = ast.order_by->column;
        plan.reduce_op = ReduceOp::SortByKey;
        plan.sort_direction = ast.order_by->direction;
      } else if (ast.predicate) {
        plan.key_column = ast.predicate->terms[0].column;
        plan.reduce_op = ReduceOp::Collect;
      } else {
        if (schema.columns.empty()) {
          fail(ErrorCode::UnknownColumn, "table has no columns to key on");
        }
        plan.key_column = schema.columns[0];
        plan.reduce_op = ReduceOp::Collect;
      }
      plan.value_spec = ValueSpec::RestOfRow;
      break;
    case ProjectionKind::Func:
      schema.require(ast.column);
      plan.key_column = ast.column;
      plan.value_spec = ValueSpec::One;
      switch (ast.func) {
        case FuncKind::Count: plan.reduce_op = ReduceOp::Sum; break;
        case FuncKind::Distinct: plan.reduce_op = ReduceOp::DistinctSet; break;
        case FuncKind::Upper: plan.reduce_op = ReduceOp::UpperPerRow; break;
        case FuncKind::Substring:
          plan.reduce_op = ReduceOp::SubstringPerRow;
          plan.substr_start = ast.substr_start;
          plan.substr_len = ast.substr_len;
          break;
      }
      break;
    case ProjectionKind::GroupCount:
      schema.require(ast.column);
      plan.key_column = ast.column;
      plan.value_spec = ValueSpec::One;
      plan.reduce_op = ReduceOp::GroupCount;
      break;
  }
  return plan;
}

std::string render_predicate(const Predicate& pred) {
  std::string out = pred.terms[0].column + "='" + pred.terms[0].literal + "'";
  if (pred.connective != Connective::None && pred.terms.size() > 1) {
    out += pred.connective == Connective::And ? " AND " : " OR ";
    out += pred.terms[1].column + "='" + pred.terms[1].literal + "'";
  }
  return out;
}

std::string describe_plan(const MapReducePlan& plan) {
  std::string out = "key=" + plan.key_column;
  out += " value=";
  out += value_spec_name(plan.value_spec);
  out += " reduce=";
  out += reduce_op_name(plan.reduce_op);
  if (plan.reduce_op == ReduceOp::SubstringPerRow) {
    out += "(" + std::to_string(plan.substr_start) + "," + std::to_string(plan.substr_len) + ")";
  } else if (plan.reduce_op == ReduceOp::SortByKey) {
    out += plan.sort_direction == SortDirection::Asc ? " ASC" : " DESC";
  }
  out += " filter=";
  out += plan.map_filter ? render_predicate(*plan.map_filter) : "∅";
  return out;
}

}  // namespace genmr
