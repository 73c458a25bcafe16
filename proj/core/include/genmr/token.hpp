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

enum class TokenKind { Keyword, Identifier, StringLiteral, NumberLiteral, Symbol };

// Keywords are matched case-insensitively. The tail of the list covers SQL
// words the grammar deliberately rejects, so the parser can tell "valid SQL we
// do not support" apart from plain garbage.
enum class Keyword {
  Select, From, Where, And, Or, Order, Group, By, Asc, Desc,
  Count, Distinct, Upper, Ucase, Substring, Substr,
  Join, Limit, Fetch, Insert, Update, Delete, Having, Union,
  Is, Like, In, Not, Between, Into, Values, Set,
};

// True for keywords that can never appear in a supported query form.
bool keyword_unsupported(Keyword kw);

struct Token {
  TokenKind kind;
  std::string text;                 // source spelling; string literals are unquoted
  std::size_t position = 0;         // byte offset into the input
  std::optional<Keyword> keyword;   // set iff kind == Keyword
};

// Splits query text into tokens. String literals use single quotes with no
// escaping; identifiers are [A-Za-z][A-Za-z0-9_]*. Throws Error with
// UnterminatedString or IllegalCharacter.
std::vector<Token> tokenize(std::string_view text);

}  // namespace genmr
