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

#include "genmr/parser.hpp"

#include <cctype>
#include <cstddef>
#include <string>

#include "genmr/error.hpp"
#include "genmr/token.hpp"

namespace genmr {

const char* dialect_name(Dialect d) {
  switch (d) {
    case Dialect::Sql: return "sql";
    case Dialect::MySql: return "mysql";
    case Dialect::Oracle: return "oracle";
    case Dialect::Db2: return "db2";
  }
  return "sql";
}

std::optional<Dialect> dialect_from_name(std::string_view name) {
  std::string lower;
  lower.reserve(name.size());
  for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "sql") return Dialect::Sql;
  if (lower == "mysql") return Dialect::MySql;
  if (lower == "oracle") return Dialect::Oracle;
  if (lower == "db2") return Dialect::Db2;
  return std::nullopt;
}

const char* func_kind_name(FuncKind k) {
  switch (k) {
    case FuncKind::Count: return "COUNT";
    case FuncKind::Distinct: return "DISTINCT";
    case FuncKind::Upper: return "UPPER";
    case FuncKind::Substring: return "SUBSTRING";
  }
  return "COUNT";
}

void QueryAst::validate() const {
  if (table.empty()) {
    fail(ErrorCode::SyntaxError, "query has no table");
  }
  if (predicate) {
    const auto& p = *predicate;
    const bool single = p.terms.size() == 1 && p.connective == Connective::None;
    const bool pair = p.terms.size() == 2 && (p.connective == Connective::And ||
                                              p.connective == Connective::Or);
    if (!single && !pair) {
      fail(ErrorCode::PredicateTooComplex,
           "predicate must be one term or two terms joined by AND/OR");
    }
  }
  if (projection == ProjectionKind::Star) {
    if (!column.empty()) fail(ErrorCode::SyntaxError, "star projection carries a column");
    if (group_by) fail(ErrorCode::UnsupportedConstruct, "GROUP BY requires a grouped count projection");
  } else if (column.empty()) {
    fail(ErrorCode::SyntaxError, "projection has no column");
  }
  if (projection == ProjectionKind::Func && func == FuncKind::Substring) {
    if (substr_start < 1) {
      fail(ErrorCode::SyntaxError, "substring start must be >= 1");
    }
    if (substr_len < 1) {
      fail(ErrorCode::SyntaxError, "substring length must be >= 1");
    }
  } else if (substr_start != 0 || substr_len != 0) {
    fail(ErrorCode::SyntaxError, "substring bounds on a non-substring projection");
  }
  if (order_by) {
    if (projection != ProjectionKind::Star) {
      fail(ErrorCode::UnsupportedConstruct, "ORDER BY is only supported with SELECT *");
    }
    if (predicate) {
      fail(ErrorCode::UnsupportedConstruct,
           "ORDER BY combined with WHERE is outside the supported query forms");
    }
    if (group_by) {
      fail(ErrorCode::UnsupportedConstruct, "ORDER BY and GROUP BY are mutually exclusive");
    }
  }
  if (projection == ProjectionKind::GroupCount) {
    if (!group_by || *group_by != column) {
      fail(ErrorCode::UnsupportedConstruct,
           "grouped count must GROUP BY the counted column");
    }
  } else if (group_by) {
    fail(ErrorCode::UnsupportedConstruct, "GROUP BY requires a grouped count projection");
  }
}

namespace {

// Maps a function keyword to its canonical kind under a dialect, or rejects
// aliases the dialect does not admit.
FuncKind resolve_func(Keyword kw, Dialect dialect, std::size_t pos) {
  switch (kw) {
    case Keyword::Count: return FuncKind::Count;
    case Keyword::Distinct: return FuncKind::Distinct;
    case Keyword::Upper: return FuncKind::Upper;
    case Keyword::Substring: return FuncKind::Substring;
    case Keyword::Ucase:
      if (dialect == Dialect::MySql || dialect == Dialect::Db2) return FuncKind::Upper;
      fail(ErrorCode::UnsupportedConstruct,
           std::string("UCASE is not recognized in dialect ") + dialect_name(dialect) +
               "; use UPPER",
           pos);
    case Keyword::Substr:
      if (dialect == Dialect::Oracle || dialect == Dialect::Db2) return FuncKind::Substring;
      fail(ErrorCode::UnsupportedConstruct,
           std::string("SUBSTR is not recognized in dialect ") + dialect_name(dialect) +
               "; use SUBSTRING",
           pos);
    default:
      fail(ErrorCode::SyntaxError, "expected a projection function", pos);
  }
}

bool is_func_keyword(Keyword kw) {
  switch (kw) {
    case Keyword::Count:
    case Keyword::Distinct:
    case Keyword::Upper:
    case Keyword::Ucase:
    case Keyword::Substring:
    case Keyword::Substr:
      return true;
    default:
      return false;
  }
}

class Parser {
 public:
  Parser(std::string_view text, Dialect dialect)
      : tokens_(tokenize(text)), dialect_(dialect) {}

  QueryAst run() {
    // Rejecting unsupported keywords up front keeps the error code stable no
    // matter where the grammar would otherwise give up first.
    for (const Token& t : tokens_) {
      if (t.keyword && keyword_unsupported(*t.keyword)) {
        fail(ErrorCode::UnsupportedConstruct,
             t.text + " is valid SQL but outside the supported query forms",
             t.position);
      }
    }
    QueryAst ast;
    expect_keyword(Keyword::Select, "expected SELECT");
    parse_projection(ast);
    expect_keyword(Keyword::From, "expected FROM");
    ast.table = expect_identifier("expected table name after FROM");
    parse_tail(ast);
    if (accept_symbol(';')) {
      // single trailing semicolon tolerated
    }
    if (!at_end()) {
      const Token& t = peek();
      fail(ErrorCode::SyntaxError, "unexpected trailing token '" + t.text + "'",
           t.position);
    }
    ast.validate();
    return ast;
  }

 private:
  void parse_projection(QueryAst& ast) {
    if (at_end()) fail(ErrorCode::SyntaxError, "query ends after SELECT", end_pos());
    const Token& t = peek();
    if (t.kind == TokenKind::Symbol && t.text == "*") {
      advance();
      ast.projection = ProjectionKind::Star;
      return;
    }
    if (t.kind == TokenKind::Keyword && t.keyword && is_func_keyword(*t.keyword)) {
      advance();
      ast.projection = ProjectionKind::Func;
      ast.func = resolve_func(*t.keyword, dialect_, t.position);
      parse_func_args(ast, t.position);
      return;
    }
    if (t.kind == TokenKind::Identifier) {
      // Grouped count head: SELECT col, COUNT(col) ... GROUP BY col
      advance();
      ast.projection = ProjectionKind::GroupCount;
      ast.column = t.text;
      expect_symbol(',', "expected ',' after grouped column");
      const Token& fn = peek_checked("expected COUNT after ','");
      if (!(fn.kind == TokenKind::Keyword && fn.keyword == Keyword::Count)) {
        fail(ErrorCode::UnsupportedConstruct,
             "only COUNT of the grouped column is supported in a grouped projection",
             fn.position);
      }
      advance();
      std::string counted;
      if (accept_symbol('(')) {
        counted = expect_identifier("expected column inside COUNT()");
        expect_symbol(')', "expected ')' after COUNT argument");
      } else {
        counted = expect_identifier("expected column after COUNT");
      }
      if (counted != ast.column) {
        fail(ErrorCode::UnsupportedConstruct,
             "grouped projection must count the grouped column", fn.position);
      }
      return;
    }
    fail(ErrorCode::SyntaxError, "expected *, a function, or a grouped column",
         t.position);
  }

  void parse_func_args(QueryAst& ast, std::size_t func_pos) {
    const bool parens = accept_symbol('(');
    if (ast.func == FuncKind::Substring && !parens) {
      fail(ErrorCode::SyntaxError, "substring requires (column, start, length)",
           func_pos);
    }
    ast.column = expect_identifier("expected column name");
    if (ast.func == FuncKind::Substring) {
      expect_symbol(',', "expected ',' after substring column");
      ast.substr_start = expect_number("expected substring start");
      expect_symbol(',', "expected ',' after substring start");
      ast.substr_len = expect_number("expected substring length");
      if (ast.substr_start < 1) {
        fail(ErrorCode::SyntaxError, "substring start must be >= 1", func_pos);
      }
      if (ast.substr_len < 1) {
        fail(ErrorCode::SyntaxError, "substring length must be >= 1", func_pos);
      }
    }
    if (parens) expect_symbol(')', "expected ')'");
  }

  void parse_tail(QueryAst& ast) {
    if (accept_keyword(Keyword::Where)) {
      ast.predicate = parse_predicate();
    }
    if (accept_keyword(Keyword::Order)) {
      if (ast.predicate) {
        fail(ErrorCode::UnsupportedConstruct,
             "ORDER BY combined with WHERE is outside the supported query forms",
             prev().position);
      }
      if (ast.projection != ProjectionKind::Star) {
        fail(ErrorCode::UnsupportedConstruct, "ORDER BY is only supported with SELECT *",
             prev().position);
      }
      expect_keyword(Keyword::By, "expected BY after ORDER");
      OrderBy ob;
      ob.column = expect_identifier("expected ORDER BY column");
      if (accept_keyword(Keyword::Asc)) {
        ob.direction = SortDirection::Asc;
      } else if (accept_keyword(Keyword::Desc)) {
        ob.direction = SortDirection::Desc;
      } else {
        ob.direction = SortDirection::Asc;
      }
      ast.order_by = ob;
    }
    if (accept_keyword(Keyword::Group)) {
      if (ast.order_by) {
        fail(ErrorCode::UnsupportedConstruct, "ORDER BY and GROUP BY are mutually exclusive",
             prev().position);
      }
      expect_keyword(Keyword::By, "expected BY after GROUP");
      const Token& col = peek_checked("expected GROUP BY column");
      std::string name = expect_identifier("expected GROUP BY column");
      if (ast.projection != ProjectionKind::GroupCount || name != ast.column) {
        fail(ErrorCode::UnsupportedConstruct,
             "GROUP BY must name the grouped-count column", col.position);
      }
      ast.group_by = name;
    } else if (ast.projection == ProjectionKind::GroupCount) {
      fail(ErrorCode::SyntaxError, "grouped projection requires GROUP BY", end_pos());
    }
  }

  Predicate parse_predicate() {
    Predicate pred;
    pred.terms.push_back(parse_term());
    if (accept_keyword(Keyword::And)) {
      pred.connective = Connective::And;
    } else if (accept_keyword(Keyword::Or)) {
      pred.connective = Connective::Or;
    } else {
      return pred;
    }
    pred.terms.push_back(parse_term());
    while (!at_end() && peek().kind == TokenKind::Keyword &&
           (peek().keyword == Keyword::And || peek().keyword == Keyword::Or)) {
      fail(ErrorCode::PredicateTooComplex,
           "at most two predicate terms with a single AND/OR are supported",
           peek().position);
    }
    return pred;
  }

  PredicateTerm parse_term() {
    PredicateTerm term;
    term.column = expect_identifier("expected predicate column");
    expect_symbol('=', "expected '=' in predicate");
    const Token& lit = peek_checked("expected quoted string literal");
    if (lit.kind != TokenKind::StringLiteral) {
      fail(ErrorCode::SyntaxError, "expected quoted string literal", lit.position);
    }
    term.literal = lit.text;
    advance();
    return term;
  }

  // token cursor helpers

  bool at_end() const { return pos_ >= tokens_.size(); }
  const Token& peek() const { return tokens_[pos_]; }
  const Token& prev() const { return tokens_[pos_ - 1]; }
  void advance() { ++pos_; }

  std::size_t end_pos() const {
    if (tokens_.empty()) return 0;
    return tokens_.back().position + tokens_.back().text.size();
  }

  const Token& peek_checked(const char* message) {
    if (at_end()) fail(ErrorCode::SyntaxError, message, end_pos());
    return peek();
  }

  bool accept_keyword(Keyword kw) {
    if (!at_end() && peek().kind == TokenKind::Keyword && peek().keyword == kw) {
      advance();
      return true;
    }
    return false;
  }

  void expect_keyword(Keyword kw, const char* message) {
    if (!accept_keyword(kw)) {
      fail(ErrorCode::SyntaxError, message, at_end() ? end_pos() : peek().position);
    }
  }

  bool accept_symbol(char sym) {
    if (!at_end() && peek().kind == TokenKind::Symbol && peek().text[0] == sym) {
      advance();
      return true;
    }
    return false;
  }

  void expect_symbol(char sym, const char* message) {
    if (!accept_symbol(sym)) {
      fail(ErrorCode::SyntaxError, message, at_end() ? end_pos() : peek().position);
    }
  }

  std::string expect_identifier(const char* message) {
    const Token& t = peek_checked(message);
    if (t.kind != TokenKind::Identifier) {
      fail(ErrorCode::SyntaxError, message, t.position);
    }
    std::string name = t.text;
    advance();
    return name;
  }

  int expect_number(const char* message) {
    const Token& t = peek_checked(message);
    if (t.kind != TokenKind::NumberLiteral || t.text.size() > 9) {
      fail(ErrorCode::SyntaxError, message, t.position);
    }
    int value = 0;
    for (char c : t.text) value = value * 10 + (c - '0');
    advance();
    return value;
  }

  std::vector<Token> tokens_;
  Dialect dialect_;
  std::size_t pos_ = 0;
};

}  // namespace

QueryAst parse(std::string_view text, Dialect dialect) {
  if (text.empty()) fail(ErrorCode::SyntaxError, "empty query", 0);
  return Parser(text, dialect).run();
}

std::string render_canonical(const QueryAst& ast) {
  ast.validate();
  std::string out = "SELECT ";
  switch (ast.projection) {
    case ProjectionKind::Star:
      out += "*";
      break;
    case ProjectionKind::Func:
      out += func_kind_name(ast.func);
      out += "(";
      out += ast.column;
      if (ast.func == FuncKind::Substring) {
        out += "," + std::to_string(ast.substr_start) + "," + std::to_string(ast.substr_len);
      }
      out += ")";
      break;
    case ProjectionKind::GroupCount:
      out += ast.column + ", COUNT(" + ast.column + ")";
      break;
  }
  out += " FROM " + ast.table;
  if (ast.predicate) {
    out += " WHERE ";
    const auto& p = *ast.predicate;
    out += p.terms[0].column + "='" + p.terms[0].literal + "'";
    if (p.connective != Connective::None) {
      out += p.connective == Connective::And ? " AND " : " OR ";
      out += p.terms[1].column + "='" + p.terms[1].literal + "'";
    }
  }
  if (ast.order_by) {
    out += " ORDER BY " + ast.order_by->column;
    out += ast.order_by->direction == SortDirection::Asc ? " ASC" : " DESC";
  }
  if (ast.group_by) {
    out += " GROUP BY " + *ast.group_by;
  }
  return out;
}

}  // namespace genmr
