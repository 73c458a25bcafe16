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

#include "genmr/ast.hpp"

namespace genmr {

// Parses one query in the given dialect flavor. Dialect-specific function
// aliases (UCASE, SUBSTR) are normalized to the canonical kinds:
//
//   dialect | UPPER SUBSTRING COUNT DISTINCT | UCASE  | SUBSTR
//   --------+--------------------------------+--------+--------
//   sql     | yes                            | no     | no
//   mysql   | yes                            | yes    | no
//   oracle  | yes                            | no     | yes
//   db2     | yes                            | yes    | yes
//
// Throws Error with SyntaxError, UnsupportedConstruct, PredicateTooComplex,
// or a tokenizer code. Never crashes on arbitrary input.
QueryAst parse(std::string_view text, Dialect dialect);

// Emits canonical Sql-dialect text; parse(render_canonical(ast), Sql) yields
// a structurally equal ast.
std::string render_canonical(const QueryAst& ast);

}  // namespace genmr
