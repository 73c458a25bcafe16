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

#include "genmr/token.hpp"

#include <array>
#include <cctype>
#include <utility>

#include "genmr/error.hpp"

namespace genmr {

namespace {

constexpr std::array<std::pair<std::string_view, Keyword>, 32> kKeywords{{
    {"SELECT", Keyword::Select},   {"FROM", Keyword::From},
    {"WHERE", Keyword::Where},     {"AND", Keyword::And},
    {"OR", Keyword::Or},           {"ORDER", Keyword::Order},
    {"GROUP", Keyword::Group},     {"BY", Keyword::By},
    {"ASC", Keyword::Asc},         {"DESC", Keyword::Desc},
    {"COUNT", Keyword::Count},     {"DISTINCT", Keyword::Distinct},
    {"UPPER", Keyword::Upper},     {"UCASE", Keyword::Ucase},
    {"SUBSTRING", Keyword::Substring}, {"SUBSTR", Keyword::Substr},
    {"JOIN", Keyword::Join},       {"LIMIT", Keyword::Limit},
    {"FETCH", Keyword::Fetch},     {"INSERT", Keyword::Insert},
    {"UPDATE", Keyword::Update},   {"DELETE", Keyword::Delete},
    {"HAVING", Keyword::Having},   {"UNION", Keyword::Union},
    {"IS", Keyword::Is},           {"LIKE", Keyword::Like},
    {"IN", Keyword::In},           {"NOT", Keyword::Not},
    {"BETWEEN", Keyword::Between}, {"INTO", Keyword::Into},
    {"VALUES", Keyword::Values},   {"SET", Keyword::Set},
}};

bool is_ident_start(unsigned char c) { return std::isalpha(c) != 0; }
bool is_ident_char(unsigned char c) { return std::isalnum(c) != 0 || c == '_'; }
bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

std::optional<Keyword> lookup_keyword(std::string_view word) {
  for (const auto& [name, kw] : kKeywords) {
    if (name.size() != word.size()) continue;
    bool match = true;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (std::toupper(static_cast<unsigned char>(word[i])) != name[i]) {
        match = false;
        break;
      }
    }
    if (match) return kw;
  }
  return std::nullopt;
}

}  // namespace

bool keyword_unsupported(Keyword kw) {
  switch (kw) {
    case Keyword::Join:
    case Keyword::Limit:
    case Keyword::Fetch:
    case Keyword::Insert:
    case Keyword::Update:
    case Keyword::Delete:
    case Keyword::Having:
    case Keyword::Union:
    case Keyword::Is:
    case Keyword::Like:
    case Keyword::In:
    case Keyword::Not:
    case Keyword::Between:
    case Keyword::Into:
    case Keyword::Values:
    case Keyword::Set:
      return true;
    default:
      return false;
  }
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();

  while (i < n) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (is_space(c)) {
      ++i;
      continue;
    }
    if (c == '\'') {
      const std::size_t start = i;
      ++i;
      std::string value;
      while (i < n && text[i] != '\'') {
        value.push_back(text[i]);
        ++i;
      }
      if (i >= n) {
        fail(ErrorCode::UnterminatedString, "string literal never closed", start);
      }
      ++i;  // closing quote
      tokens.push_back({TokenKind::StringLiteral, std::move(value), start, std::nullopt});
      continue;
    }
    if (is_ident_start(c)) {
      const std::size_t start = i;
      while (i < n && is_ident_char(static_cast<unsigned char>(text[i]))) ++i;
      std::string word(text.substr(start, i - start));
      if (auto kw = lookup_keyword(word)) {
        tokens.push_back({TokenKind::Keyword, std::move(word), start, kw});
      } else {
        tokens.push_back({TokenKind::Identifier, std::move(word), start, std::nullopt});
      }
      continue;
    }
    if (std::isdigit(c) != 0) {
      const std::size_t start = i;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i])) != 0) ++i;
      tokens.push_back({TokenKind::NumberLiteral,
                        std::string(text.substr(start, i - start)), start,
                        std::nullopt});
      continue;
    }
    switch (c) {
      case '(':
      case ')':
      case ',':
      case '=':
      case '*':
      case ';':
        tokens.push_back({TokenKind::Symbol, std::string(1, static_cast<char>(c)), i,
                          std::nullopt});
        ++i;
        continue;
      default:
        fail(ErrorCode::IllegalCharacter,
             "character '" + std::string(1, static_cast<char>(c)) +
                 "' is outside the query alphabet",
             i);
    }
  }
  return tokens;
}

}  // namespace genmr
