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

#include "genmr/table.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "genmr/error.hpp"

namespace genmr {

std::optional<std::size_t> Schema::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Schema::require(std::string_view name) const {
  if (auto idx = index_of(name)) return *idx;
  std::string known;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) known += ", ";
    known += columns[i];
  }
  fail(ErrorCode::UnknownColumn,
       "unknown column '" + std::string(name) + "' (have: " + known + ")");
}

namespace {

struct CsvReader {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 1;

  bool at_end() const { return pos >= text.size(); }

  // Reads one record into fields; returns false at end of input.
  bool read_record(std::vector<std::string>& fields) {
    fields.clear();
    if (at_end()) return false;
    std::string field;
    bool quoted = false;
    const std::size_t record_line = line;
    while (true) {
      if (at_end()) {
        if (quoted) {
          fail(ErrorCode::IoError,
               "unterminated quoted field starting on line " + std::to_string(record_line));
        }
        fields.push_back(std::move(field));
        return true;
      }
      char c = text[pos];
      if (quoted) {
        if (c == '"') {
          if (pos + 1 < text.size() && text[pos + 1] == '"') {
            field.push_back('"');
            pos += 2;
          } else {
            quoted = false;
            ++pos;
          }
        } else {
          if (c == '\n') ++line;
          field.push_back(c);
          ++pos;
        }
        continue;
      }
      if (c == '"' && field.empty()) {
        quoted = true;
        ++pos;
      } else if (c == ',') {
        fields.push_back(std::move(field));
        field.clear();
        ++pos;
      } else if (c == '\r' && pos + 1 < text.size() && text[pos + 1] == '\n') {
        fields.push_back(std::move(field));
        pos += 2;
        ++line;
        return true;
      } else if (c == '\n') {
        fields.push_back(std::move(field));
        ++pos;
        ++line;
        return true;
      } else {
        field.push_back(c);
        ++pos;
      }
    }
  }
};

bool needs_quoting(const std::string& field) {
  for (char c : field) {
    if (c == ',' || c == '"' || c == '\n' || c == '\r') return true;
  }
  return false;
}

}  // namespace

TableData parse_csv_text(std::string_view text, std::string_view table_name) {
  TableData table;
  table.name = std::string(table_name);
  CsvReader reader{text};
  std::vector<std::string> fields;
  if (!reader.read_record(fields) || (fields.size() == 1 && fields[0].empty())) {
    fail(ErrorCode::IoError, "CSV input has no header record");
  }
  std::set<std::string> seen;
  for (const auto& col : fields) {
    if (!seen.insert(col).second) {
      fail(ErrorCode::DuplicateColumn, "duplicate column '" + col + "' in CSV header");
    }
  }
  table.schema.columns = fields;
  const std::size_t width = fields.size();
  std::size_t line = reader.line;
  while (reader.read_record(fields)) {
    if (fields.size() == 1 && fields[0].empty() && reader.at_end()) {
      break;  // trailing newline produces one empty record
    }
    if (fields.size() != width) {
      fail(ErrorCode::RaggedRow,
           "line " + std::to_string(line) + " has " + std::to_string(fields.size()) +
               " fields, expected " + std::to_string(width));
    }
    table.rows.push_back(fields);
    line = reader.line;
  }
  return table;
}

TableData ingest_csv(const std::string& path, std::string_view table_name) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(ErrorCode::IoError, "cannot open CSV file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    fail(ErrorCode::IoError, "cannot read CSV file '" + path + "'");
  }
  return parse_csv_text(buf.str(), table_name);
}

std::string to_csv(const TableData& table) {
  std::string out;
  auto emit_row = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out.push_back(',');
      if (needs_quoting(fields[i])) {
        out.push_back('"');
        for (char c : fields[i]) {
          if (c == '"') out.push_back('"');
          out.push_back(c);
        }
        out.push_back('"');
      } else {
        out += fields[i];
      }
    }
    out.push_back('\n');
  };
  emit_row(table.schema.columns);
  for (const auto& row : table.rows) emit_row(row);
  return out;
}

}  // namespace genmr
