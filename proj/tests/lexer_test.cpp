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

#include <string>
#include <vector>

#include "doctest.h"
#include "genmr/error.hpp"
#include "genmr/token.hpp"

using namespace genmr;

TEST_CASE("tokenize splits a full query into the expected kinds") {
  const auto tokens = tokenize("SELECT COUNT(State) FROM teachers WHERE State = 'Andhra Pradesh';");
  REQUIRE(tokens.size() == 12);
  CHECK(tokens[0].kind == TokenKind::Keyword);
  CHECK(tokens[0].keyword == Keyword::Select);
  CHECK(tokens[1].keyword == Keyword::Count);
  CHECK(tokens[2].kind == TokenKind::Symbol);
  CHECK(tokens[2].text == "(");
  CHECK(tokens[3].kind == TokenKind::Identifier);
  CHECK(tokens[3].text == "State");
  CHECK(tokens[5].keyword == Keyword::From);
  CHECK(tokens[6].text == "teachers");
  CHECK(tokens[9].text == "=");
  CHECK(tokens[10].kind == TokenKind::StringLiteral);
  CHECK(tokens[10].text == "Andhra Pradesh");
  CHECK(tokens[11].text == ";");
}

TEST_CASE("keywords match case-insensitively") {
  for (const char* spelling : {"select", "SELECT", "SeLeCt"}) {
    const auto tokens = tokenize(spelling);
    REQUIRE(tokens.size() == 1);
    CHECK(tokens[0].kind == TokenKind::Keyword);
    CHECK(tokens[0].keyword == Keyword::Select);
    CHECK(tokens[0].text == spelling);
  }
  CHECK(tokenize("ucase")[0].keyword == Keyword::Ucase);
  CHECK(tokenize("SUBSTR")[0].keyword == Keyword::Substr);
  CHECK(tokenize("OrDeR")[0].keyword == Keyword::Order);
}

TEST_CASE("identifiers allow letters, digits, and underscores") {
  const auto tokens = tokenize("School_Type T1 c2_x");
  REQUIRE(tokens.size() == 3);
  for (const auto& t : tokens) CHECK(t.kind == TokenKind::Identifier);
  CHECK(tokens[0].text == "School_Type");
  CHECK(tokens[2].text == "c2_x");
}

TEST_CASE("string literals keep inner spacing and record their start offset") {
  const auto tokens = tokenize("WHERE x = '  padded  value '");
  REQUIRE(tokens.size() == 4);
  CHECK(tokens[3].kind == TokenKind::StringLiteral);
  CHECK(tokens[3].text == "  padded  value ");
  CHECK(tokens[3].position == 10);
}

TEST_CASE("numbers tokenize digit runs") {
  const auto tokens = tokenize("SUBSTRING(State,1,15)");
  REQUIRE(tokens.size() == 8);
  CHECK(tokens[4].kind == TokenKind::NumberLiteral);
  CHECK(tokens[4].text == "1");
  CHECK(tokens[6].kind == TokenKind::NumberLiteral);
  CHECK(tokens[6].text == "15");
}

TEST_CASE("an unterminated string names its opening quote") {
  try {
    tokenize("SELECT * FROM t WHERE a = 'oops");
    FAIL("expected Error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnterminatedString);
    CHECK(e.position() == 26);
  }
}

TEST_CASE("characters outside the query alphabet are rejected") {
  try {
    tokenize("SELECT @ FROM t");
    FAIL("expected Error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IllegalCharacter);
    CHECK(e.position() == 7);
    CHECK(std::string(e.what()).find("'@'") != std::string::npos);
  }
}

TEST_CASE("whitespace variants separate tokens") {
  const auto tokens = tokenize("SELECT\t*\r\nFROM\n t");
  REQUIRE(tokens.size() == 4);
  CHECK(tokens[1].text == "*");
  CHECK(tokens[3].text == "t");
}

TEST_CASE("unsupported keywords are flagged as such") {
  for (Keyword kw : {Keyword::Join, Keyword::Limit, Keyword::Insert, Keyword::Union,
                     Keyword::Like, Keyword::Between, Keyword::Set}) {
    CHECK(keyword_unsupported(kw));
  }
  for (Keyword kw : {Keyword::Select, Keyword::From, Keyword::Where, Keyword::Count,
                     Keyword::Ucase, Keyword::Substr, Keyword::Group}) {
    CHECK_FALSE(keyword_unsupported(kw));
  }
}

TEST_CASE("empty input yields no tokens") {
  CHECK(tokenize("").empty());
  CHECK(tokenize("   \n\t").empty());
}
