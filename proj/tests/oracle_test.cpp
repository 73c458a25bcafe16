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
#include "genmr/oracle.hpp"
#include "genmr/parser.hpp"

using namespace genmr;

namespace {

using Rows = std::vector<std::vector<std::string>>;

TableData sample() {
  TableData t;
  t.name = "t";
  t.schema.columns = {"Id", "State", "Type"};
  t.rows = {{"1", "Bihar", "x"},  {"2", "Assam", "y"}, {"3", "Bihar", "y"},
            {"4", "Kerala", "x"}, {"5", "Assam", "x"}};
  return t;
}

OracleResult eval_text(const std::string& text, const TableData& table) {
  return eval(parse(text, Dialect::Sql), table);
}

}  // namespace

TEST_CASE("count tallies matching rows and hides the zero") {
  const auto t = sample();
  CHECK(eval_text("SELECT COUNT(State) FROM t", t).rows == Rows{{"5"}});
  CHECK(eval_text("SELECT COUNT(State) FROM t WHERE State='Bihar'", t).rows == Rows{{"2"}});
  CHECK(eval_text("SELECT COUNT(State) FROM t WHERE State='Goa'", t).rows.empty());
  CHECK(eval_text("SELECT COUNT(State) FROM t WHERE State='Bihar' AND Type='y'", t).rows ==
        Rows{{"1"}});
  CHECK(eval_text("SELECT COUNT(State) FROM t WHERE State='Bihar' OR Type='y'", t).rows ==
        Rows{{"3"}});
}

TEST_CASE("distinct values come back sorted and deduplicated") {
  const auto t = sample();
  const auto result = eval_text("SELECT DISTINCT(State) FROM t", t);
  CHECK(result.kind == OracleKind::Distinct);
  CHECK(result.rows == Rows{{"Assam"}, {"Bihar"}, {"Kerala"}});
}

TEST_CASE("upper and substring map each surviving row") {
  const auto t = sample();
  CHECK(eval_text("SELECT UPPER(State) FROM t WHERE Type='y'", t).rows ==
        Rows{{"ASSAM"}, {"BIHAR"}});
  CHECK(eval_text("SELECT SUBSTRING(State,1,3) FROM t WHERE State='Kerala'", t).rows ==
        Rows{{"Ker"}});
  CHECK(eval_text("SELECT SUBSTRING(State,2,2) FROM t WHERE State='Assam'", t).rows ==
        Rows{{"ss"}, {"ss"}});
}

TEST_CASE("star results lead with the predicate column") {
  const auto t = sample();
  const auto result = eval_text("SELECT * FROM t WHERE State='Bihar'", t);
  CHECK(result.kind == OracleKind::Rows);
  CHECK(result.rows == Rows{{"Bihar", "1", "x"}, {"Bihar", "3", "y"}});
}

TEST_CASE("order by sorts stably on the key column") {
  const auto t = sample();
  const auto asc = eval_text("SELECT * FROM t ORDER BY State ASC", t);
  CHECK(asc.kind == OracleKind::Ordered);
  CHECK(asc.rows == Rows{{"Assam", "2", "y"},
                         {"Assam", "5", "x"},
                         {"Bihar", "1", "x"},
                         {"Bihar", "3", "y"},
                         {"Kerala", "4", "x"}});

  const auto desc = eval_text("SELECT * FROM t ORDER BY State DESC", t);
  CHECK(desc.rows[0] == std::vector<std::string>{"Kerala", "4", "x"});
  // Descending keeps equal keys in original order too.
  CHECK(desc.rows[1] == std::vector<std::string>{"Bihar", "1", "x"});
  CHECK(desc.rows[2] == std::vector<std::string>{"Bihar", "3", "y"});
}

TEST_CASE("group count pairs values with their tallies") {
  const auto t = sample();
  const auto result = eval_text("SELECT State, COUNT(State) FROM t GROUP BY State", t);
  CHECK(result.kind == OracleKind::GroupCount);
  CHECK(result.rows == Rows{{"Assam", "2"}, {"Bihar", "2"}, {"Kerala", "1"}});
}

TEST_CASE("an empty table gives empty results for every form") {
  TableData empty = sample();
  empty.rows.clear();
  CHECK(eval_text("SELECT COUNT(State) FROM t", empty).rows.empty());
  CHECK(eval_text("SELECT DISTINCT(State) FROM t", empty).rows.empty());
  CHECK(eval_text("SELECT * FROM t WHERE State='Bihar'", empty).rows.empty());
  CHECK(eval_text("SELECT * FROM t ORDER BY State", empty).rows.empty());
  CHECK(eval_text("SELECT State, COUNT(State) FROM t GROUP BY State", empty).rows.empty());
}

TEST_CASE("unknown columns fail before any evaluation") {
  const auto t = sample();
  CHECK_THROWS_AS(eval_text("SELECT COUNT(Wrong) FROM t", t), Error);
  CHECK_THROWS_AS(eval_text("SELECT * FROM t WHERE Wrong='x'", t), Error);
}

TEST_CASE("order sensitivity follows the query form") {
  CHECK(ordered_comparison(parse("SELECT * FROM t ORDER BY a", Dialect::Sql)));
  CHECK(ordered_comparison(parse("SELECT DISTINCT(a) FROM t", Dialect::Sql)));
  CHECK_FALSE(ordered_comparison(parse("SELECT COUNT(a) FROM t", Dialect::Sql)));
  CHECK_FALSE(ordered_comparison(parse("SELECT * FROM t WHERE a='x'", Dialect::Sql)));
  CHECK_FALSE(ordered_comparison(parse("SELECT UPPER(a) FROM t", Dialect::Sql)));
}

TEST_CASE("diff accepts equal sequences and multisets") {
  OracleResult expected;
  expected.rows = {{"a"}, {"b"}, {"c"}};
  CHECK(diff(expected, {{"a"}, {"b"}, {"c"}}, true).match);
  CHECK(diff(expected, {{"c"}, {"a"}, {"b"}}, false).match);
  CHECK_FALSE(diff(expected, {{"c"}, {"a"}, {"b"}}, true).match);
}

TEST_CASE("ordered diff names the first divergence") {
  OracleResult expected;
  expected.rows = {{"a"}, {"b"}};

  const auto wrong = diff(expected, {{"a"}, {"x"}}, true);
  REQUIRE_FALSE(wrong.match);
  REQUIRE_FALSE(wrong.mismatches.empty());
  CHECK(wrong.mismatches[0].find("row 1") != std::string::npos);
  CHECK(wrong.mismatches[0].find("expected") != std::string::npos);

  const auto missing = diff(expected, {{"a"}}, true);
  REQUIRE_FALSE(missing.match);
  CHECK(missing.mismatches[0].find("missing row") != std::string::npos);

  const auto extra = diff(expected, {{"a"}, {"b"}, {"z"}}, true);
  REQUIRE_FALSE(extra.match);
  CHECK(extra.mismatches[0].find("extra row") != std::string::npos);
}

TEST_CASE("multiset diff names missing and unexpected rows") {
  OracleResult expected;
  expected.rows = {{"Assam", "2"}, {"Bihar", "1"}};

  const auto result = diff(expected, {{"Assam", "2"}, {"Goa", "1"}}, false);
  REQUIRE_FALSE(result.match);
  bool missing_named = false;
  bool unexpected_named = false;
  for (const auto& line : result.mismatches) {
    if (line.find("missing row") != std::string::npos &&
        line.find("Bihar") != std::string::npos) {
      missing_named = true;
    }
    if (line.find("unexpected row") != std::string::npos &&
        line.find("Goa") != std::string::npos) {
      unexpected_named = true;
    }
  }
  CHECK(missing_named);
  CHECK(unexpected_named);

  // Duplicates count: one copy missing is still a mismatch.
  OracleResult dupes;
  dupes.rows = {{"a"}, {"a"}};
  CHECK_FALSE(diff(dupes, {{"a"}}, false).match);
  CHECK(diff(dupes, {{"a"}, {"a"}}, false).match);
}
