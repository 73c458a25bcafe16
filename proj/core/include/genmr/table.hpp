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
#include <string_view>
#include <vector>

#include "genmr/schema.hpp"

namespace genmr {

// In-memory table: a header schema plus string-valued rows. Rows keep the
// CSV column order; every row has exactly schema.columns.size() fields.
struct TableData {
  std::string name;
  Schema schema;
  std::vector<std::vector<std::string>> rows;

  bool operator==(const TableData&) const = default;
};

// Parses CSV text (first record is the header). Quoted fields follow
// RFC 4180: surrounding double quotes, embedded quotes doubled, commas and
// newlines allowed inside quotes. Both LF and CRLF line endings accepted.
// Raises RaggedRow when a data record's field count differs from the header
// and DuplicateColumn when two header fields share a name.
TableData parse_csv_text(std::string_view text, std::string_view table_name);

// Reads and parses a CSV file; raises IoError when the file cannot be read.
TableData ingest_csv(const std::string& path, std::string_view table_name);

// Serializes a table back to CSV with LF line endings, quoting fields only
// when they contain a comma, quote, or newline.
std::string to_csv(const TableData& table);

}  // namespace genmr
