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

#include "genmr/oracle.hpp"

#include <algorithm>
#include <map>

#include "genmr/error.hpp"

namespace genmr {

namespace {

std::string upper_ascii(const std::string& s) {
  std::string out = s;
  for (char& c : out) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  }
  return out;
}

std::string substr_1based_clamped(const std::string& s, int start, int len) {
  if (start < 1) {
    fail(ErrorCode::SubstringOutOfRange,
         "substring start " + std::to_string(start) + " is before position 1");
  }
  const std::size_t begin = static_cast<std::size_t>(start) - 1;
  if (begin >= s.size() || len < 1) return "";
  return s.substr(begin, static_cast<std::size_t>(len));
}

bool matches(const Predicate& pred, const std::vector<std::string>& row,
             const Schema& schema) {
  const bool a = row.at(schema.require(pred.terms[0].column)) == pred.terms[0].literal;
  if (pred.connective == Connective::None) return a;
  const bool b = row.at(schema.require(pred.terms[1].column)) == pred.terms[1].literal;
  return pred.connective == Connective::And ? (a && b) : (a || b);
}

// The column that leads each output row for row-shaped results: the order
// column, else the first predicate column, else the first schema column.
std::string leading_column(const QueryAst& ast, const Schema& schema) {
  if (ast.order_by) return ast.order_by->column;
  if (ast.predicate) return ast.predicate->terms[0].column;
  if (schema.columns.empty()) {
    fail(ErrorCode::UnknownColumn, "table has no columns");
  }
  return schema.columns[0];
}

std::vector<std::string> key_first(const std::vector<std::string>& row,
                                   std::size_t key_idx) {
  std::vector<std::string> out;
  out.reserve(row.size());
  out.push_back(row[key_idx]);
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i != key_idx) out.push_back(row[i]);
  }
  return out;
}

}  // namespace

OracleResult eval(const QueryAst& ast, const TableData& table) {
  ast.validate();
  const Schema& schema = table.schema;
  if (ast.predicate) {
    for (const auto& term : ast.predicate->terms) schema.require(term.column);
  }

  std::vector<const std::vector<std::string>*> selected;
  for (const auto& row : table.rows) {
    if (!ast.predicate || matches(*ast.predicate, row, schema)) {
      selected.push_back(&row);
    }
  }

  OracleResult result;
  if (ast.projection == ProjectionKind::Star) {
    const std::size_t key_idx = schema.require(leading_column(ast, schema));
    if (ast.order_by) {
      result.kind = OracleKind::Ordered;
      std::stable_sort(selected.begin(), selected.end(),
                       [&](const std::vector<std::string>* a,
                           const std::vector<std::string>* b) {
                         return ast.order_by->direction == SortDirection::Asc
                                    ? (*a)[key_idx] < (*b)[key_idx]
                                    : (*a)[key_idx] > (*b)[key_idx];
                       });
    } else {
      result.kind = OracleKind::Rows;
    }
    for (const auto* row : selected) result.rows.push_back(key_first(*row, key_idx));
    return result;
  }

  if (ast.projection == ProjectionKind::GroupCount) {
    result.kind = OracleKind::GroupCount;
    const std::size_t idx = schema.require(ast.column);
    std::map<std::string, std::uint64_t> counts;
    for (const auto* row : selected) ++counts[(*row)[idx]];
    for (const auto& [value, n] : counts) {
      result.rows.push_back({value, std::to_string(n)});
    }
    return result;
  }

  const std::size_t idx = schema.require(ast.column);
  switch (ast.func) {
    case FuncKind::Count:
      result.kind = OracleKind::Count;
      if (!selected.empty()) {
        result.rows.push_back({std::to_string(selected.size())});
      }
      break;
    case FuncKind::Distinct: {
      result.kind = OracleKind::Distinct;
      std::vector<std::string> values;
      for (const auto* row : selected) values.push_back((*row)[idx]);
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end()), values.end());
      for (auto& v : values) result.rows.push_back({std::move(v)});
      break;
    }
    case FuncKind::Upper:
      result.kind = OracleKind::Upper;
      for (const auto* row : selected) result.rows.push_back({upper_ascii((*row)[idx])});
      break;
    case FuncKind::Substring:
      result.kind = OracleKind::Substring;
      for (const auto* row : selected) {
        result.rows.push_back(
            {substr_1based_clamped((*row)[idx], ast.substr_start, ast.substr_len)});
      }
      break;
  }
  return result;
}

bool ordered_comparison(const QueryAst& ast) {
  if (ast.order_by) return true;
  return ast.projection == ProjectionKind::Func && ast.func == FuncKind::Distinct;
}

namespace {

std::string render_row(const std::vector<std::string>& row) {
  std::string out = "(";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ", ";
    out += row[i];
  }
  out += ")";
  return out;
}

}  // namespace

DiffReport diff(const OracleResult& oracle,
                const std::vector<std::vector<std::string>>& actual, bool ordered) {
  DiffReport report;
  report.ordered = ordered;
  if (ordered) {
    const std::size_t common = std::min(oracle.rows.size(), actual.size());
    for (std::size_t i = 0; i < common; ++i) {
      if (oracle.rows[i] != actual[i]) {
        report.match = false;
        report.mismatches.push_back("row " + std::to_string(i) + ": expected " +
                                    render_row(oracle.rows[i]) + ", got " +
                                    render_row(actual[i]));
        return report;
      }
    }
    if (oracle.rows.size() != actual.size()) {
      report.match = false;
      const bool missing = actual.size() < oracle.rows.size();
      const auto& row = missing ? oracle.rows[common] : actual[common];
      report.mismatches.push_back(std::string(missing ? "missing row " : "extra row ") +
                                  std::to_string(common) + ": " + render_row(row));
    }
    return report;
  }

  std::vector<std::vector<std::string>> want = oracle.rows;
  std::vector<std::vector<std::string>> got = actual;
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  std::size_t w = 0;
  std::size_t g = 0;
  while (w < want.size() && g < got.size() && report.mismatches.size() < 8) {
    if (want[w] == got[g]) {
      ++w;
      ++g;
    } else if (want[w] < got[g]) {
      report.mismatches.push_back("missing row: " + render_row(want[w++]));
    } else {
      report.mismatches.push_back("unexpected row: " + render_row(got[g++]));
    }
  }
  while (w < want.size() && report.mismatches.size() < 8) {
    report.mismatches.push_back("missing row: " + render_row(want[w++]));
  }
  while (g < got.size() && report.mismatches.size() < 8) {
    report.mismatches.push_back("unexpected row: " + render_row(got[g++]));
  }
  report.match = report.mismatches.empty() && want.size() == got.size();
  return report;
}

}  // namespace genmr
