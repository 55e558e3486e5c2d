// Copyright 2026 The Netstate Authors.
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


#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "netstate/sql.h"
#include "netstate/sql_lexer.h"

namespace netstate::sql {
namespace {

bool IsWordStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool IsWordChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool IsDigit(char c) { return c >= '0' && c <= '9'; }

std::string Upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return out;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

// Returns false and sets `error` on failure; `pos` is advanced past the
// token on success.
bool LexOne(std::string_view text, size_t& pos, Token& tok, SqlError* error) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  const size_t start = pos;
  auto finish = [&](Token::Kind kind, std::string t) {
    tok = Token{kind, std::move(t), start, pos};
    return true;
  };
  auto fail = [&](size_t at, std::string msg) {
    if (error) *error = SqlError(SqlError::Kind::kLexical, at, std::move(msg));
    return false;
  };
  if (pos == text.size()) return finish(Token::Kind::kEnd, "");

  char c = text[pos];
  if (IsWordStart(c)) {
    while (pos < text.size() && IsWordChar(text[pos])) ++pos;
    return finish(Token::Kind::kWord, std::string(text.substr(start, pos - start)));
  }
  bool negative = c == '-' && pos + 1 < text.size() &&
                  (IsDigit(text[pos + 1]) ||
                   (text[pos + 1] == '.' && pos + 2 < text.size() && IsDigit(text[pos + 2])));
  if (IsDigit(c) || negative ||
      (c == '.' && pos + 1 < text.size() && IsDigit(text[pos + 1]))) {
    if (negative) ++pos;
    while (pos < text.size() && IsDigit(text[pos])) ++pos;
    if (pos < text.size() && text[pos] == '.') {
      ++pos;
      while (pos < text.size() && IsDigit(text[pos])) ++pos;
    }
    if (pos < text.size() && IsWordStart(text[pos])) {
      return fail(pos, "malformed number");
    }
    std::string number(text.substr(start, pos - start));
    if (!Decimal::Parse(number)) {
      return fail(start, "numeric literal '" + number +
                             "' is out of range or has more than 6 decimal places");
    }
    return finish(Token::Kind::kNumber, number);
  }
  if (c == '\'' || c == '"') {
    std::string value;
    ++pos;
    while (true) {
      if (pos >= text.size()) return fail(start, "unterminated string literal");
      if (text[pos] == c) {
        if (pos + 1 < text.size() && text[pos + 1] == c) {
          value += c;
          pos += 2;
          continue;
        }
        ++pos;
        break;
      }
      value += text[pos++];
    }
    return finish(Token::Kind::kString, value);
  }
  ++pos;
  switch (c) {
    case '(': return finish(Token::Kind::kLParen, "(");
    case ')': return finish(Token::Kind::kRParen, ")");
    case ',': return finish(Token::Kind::kComma, ",");
    case '*': return finish(Token::Kind::kStar, "*");
    case ';': return finish(Token::Kind::kSemicolon, ";");
    case '=': return finish(Token::Kind::kOperator, "=");
    case '<':
    case '>':
      if (pos < text.size() && (text[pos] == '=' || (c == '<' && text[pos] == '>'))) ++pos;
      return finish(Token::Kind::kOperator, std::string(text.substr(start, pos - start)));
    case '!':
      if (pos < text.size() && text[pos] == '=') {
        ++pos;
        return finish(Token::Kind::kOperator, "!=");
      }
      break;
    case '|':
      if (pos < text.size() && text[pos] == '|') {
        ++pos;
        return finish(Token::Kind::kOther, "||");
      }
      break;
    case '+':
    case '-':
    case '/':
    case '%':
    case '.':
      return finish(Token::Kind::kOther, std::string(1, c));
    default:
      break;
  }
  return fail(start, std::string("unexpected character '") + c + "'");
}

const std::map<std::string, std::string>& UnsupportedKeywords() {
  static const std::map<std::string, std::string> table = {
      {"ORDER", "ORDER BY"},       {"GROUP", "GROUP BY"},
      {"HAVING", "HAVING"},        {"LIMIT", "LIMIT"},
      {"OFFSET", "OFFSET"},        {"JOIN", "JOIN"},
      {"INNER", "JOIN"},           {"LEFT", "JOIN"},
      {"RIGHT", "JOIN"},           {"FULL", "JOIN"},
      {"OUTER", "JOIN"},           {"CROSS", "JOIN"},
      {"NATURAL", "JOIN"},         {"ON", "JOIN"},
      {"USING", "JOIN"},           {"UNION", "UNION"},
      {"INTERSECT", "INTERSECT"},  {"EXCEPT", "EXCEPT"},
      {"DISTINCT", "DISTINCT"},    {"ALL", "ALL"},
      {"OR", "OR"},                {"NOT", "NOT"},
      {"IN", "IN"},                {"LIKE", "LIKE"},
      {"BETWEEN", "BETWEEN"},      {"IS", "IS NULL"},
      {"NULL", "NULL"},            {"EXISTS", "EXISTS"},
      {"CASE", "CASE"},            {"WITH", "WITH"},
      {"INSERT", "INSERT"},        {"UPDATE", "UPDATE"},
      {"DELETE", "DELETE"},        {"CREATE", "CREATE"},
      {"DROP", "DROP"},            {"ALTER", "ALTER"},
      {"REPLACE", "REPLACE"},      {"INTO", "INTO"},
      {"VALUES", "VALUES"},        {"SET", "SET"},
  };
  return table;
}

const std::map<std::string, Aggregate>& AggregateKeywords() {
  static const std::map<std::string, Aggregate> table = {
      {"MIN", Aggregate::kMin}, {"MAX", Aggregate::kMax},   {"COUNT", Aggregate::kCount},
      {"SUM", Aggregate::kSum}, {"AVG", Aggregate::kAvg},
  };
  return table;
}

bool IsReserved(const std::string& upper) {
  static const std::set<std::string> core = {"SELECT", "FROM", "WHERE", "AND", "AS"};
  return core.contains(upper) || AggregateKeywords().contains(upper) ||
         UnsupportedKeywords().contains(upper);
}

std::string Describe(const Token& t) {
  switch (t.kind) {
    case Token::Kind::kEnd: return "end of input";
    case Token::Kind::kString: return "text literal '" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lex(text)) {}

  SelectStatement ParseStatement() {
    SelectStatement stmt = ParseSelect(/*nested=*/false);
    if (Peek().kind == Token::Kind::kSemicolon) Next();
    if (Peek().kind != Token::Kind::kEnd) Fail(Peek(), {"end of input"});
    return stmt;
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }
  const Token& Next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  bool PeekKeyword(std::string_view kw) const {
    return Peek().kind == Token::Kind::kWord && Upper(Peek().text) == kw;
  }

  [[noreturn]] void Fail(const Token& t, std::vector<std::string> expected) const {
    if (t.kind == Token::Kind::kWord) {
      auto it = UnsupportedKeywords().find(Upper(t.text));
      if (it != UnsupportedKeywords().end()) {
        throw SqlError(SqlError::Kind::kUnsupported, t.offset,
                       "unsupported construct: " + it->second, std::move(expected));
      }
    }
    if (t.kind == Token::Kind::kOther) {
      std::string what = t.text == "." ? "qualified names" : "arithmetic expressions";
      throw SqlError(SqlError::Kind::kUnsupported, t.offset, "unsupported construct: " + what,
                     std::move(expected));
    }
    if (t.kind == Token::Kind::kOperator && (t.text == "<>" || t.text == "!=")) {
      throw SqlError(SqlError::Kind::kUnsupported, t.offset,
                     "unsupported construct: operator " + t.text, std::move(expected));
    }
    std::string msg = "unexpected " + Describe(t) + ", expected ";
    for (size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    throw SqlError(SqlError::Kind::kSyntax, t.offset, msg, std::move(expected));
  }

  void Expect(Token::Kind kind, const char* label) {
    if (Peek().kind != kind) Fail(Peek(), {label});
    Next();
  }

  void ExpectKeyword(const char* kw) {
    if (!PeekKeyword(kw)) Fail(Peek(), {kw});
    Next();
  }

  std::string Identifier() {
    const Token& t = Peek();
    if (t.kind != Token::Kind::kWord || IsReserved(Upper(t.text))) Fail(t, {"identifier"});
    Next();
    return Lower(t.text);
  }

  SelectStatement ParseSelect(bool nested) {
    ExpectKeyword("SELECT");
    SelectStatement stmt;
    std::vector<size_t> offsets;
    do {
      offsets.push_back(Peek().offset);
      stmt.projections.push_back(ParseProjection(nested));
    } while (Peek().kind == Token::Kind::kComma && (Next(), true));

    bool all_subqueries = std::all_of(
        stmt.projections.begin(), stmt.projections.end(),
        [](const Projection& p) { return std::holds_alternative<Subquery>(p.expr); });
    if (PeekKeyword("FROM")) {
      Next();
      stmt.from_table = Identifier();
      if (Peek().kind == Token::Kind::kComma) {
        throw SqlError(SqlError::Kind::kUnsupported, Peek().offset,
                       "unsupported construct: JOIN (multiple tables in FROM)");
      }
      if (PeekKeyword("WHERE")) {
        Next();
        do {
          stmt.where.push_back(ParsePredicate());
        } while (PeekKeyword("AND") && (Next(), true));
      }
    } else if (nested || !all_subqueries) {
      Fail(Peek(), {"','", "FROM"});
    }

    // Structural rules that the grammar above does not capture.
    bool any_scalar = false, any_row = false;
    size_t subqueries = 0;
    for (size_t i = 0; i < stmt.projections.size(); ++i) {
      const auto& p = stmt.projections[i];
      (p.IsScalar() ? any_scalar : any_row) = true;
      if (any_scalar && any_row) {
        throw SqlError(SqlError::Kind::kUnsupported, offsets[i],
                       "unsupported construct: mixing aggregate and per-row projections "
                       "(GROUP BY)");
      }
      if (std::holds_alternative<Subquery>(p.expr) && ++subqueries > 3) {
        throw SqlError(SqlError::Kind::kUnsupported, offsets[i],
                       "unsupported construct: more than 3 scalar subqueries");
      }
    }
    if (nested) {
      if (stmt.projections.size() != 1 ||
          std::holds_alternative<AllColumns>(stmt.projections[0].expr)) {
        throw SqlError(SqlError::Kind::kUnsupported, offsets[0],
                       "unsupported construct: subquery must return exactly one column");
      }
    }
    return stmt;
  }

  Projection ParseProjection(bool nested) {
    Projection proj{ColumnRef{}, std::nullopt};
    const Token& t = Peek();
    if (t.kind == Token::Kind::kStar) {
      Next();
      proj.expr = AllColumns{};
    } else if (t.kind == Token::Kind::kLParen) {
      Next();
      if (nested) {
        throw SqlError(SqlError::Kind::kUnsupported, t.offset,
                       "unsupported construct: nested subquery");
      }
      if (!PeekKeyword("SELECT")) Fail(Peek(), {"SELECT"});
      proj.expr = Subquery(ParseSelect(/*nested=*/true));
      Expect(Token::Kind::kRParen, "')'");
    } else if (t.kind == Token::Kind::kWord &&
               AggregateKeywords().contains(Upper(t.text))) {
      Aggregate fn = AggregateKeywords().at(Upper(t.text));
      Next();
      Expect(Token::Kind::kLParen, "'('");
      AggregateCall call{fn, std::nullopt};
      if (Peek().kind == Token::Kind::kStar && fn == Aggregate::kCount) {
        Next();
      } else {
        if (Peek().kind == Token::Kind::kStar) Fail(Peek(), {"identifier"});
        call.column = Identifier();
      }
      Expect(Token::Kind::kRParen, "')'");
      proj.expr = call;
    } else if (t.kind == Token::Kind::kWord) {
      proj.expr = ColumnRef{Identifier()};
    } else {
      Fail(t, {"identifier", "'*'", "aggregate", "'('"});
    }
    if (PeekKeyword("AS")) {
      Next();
      proj.alias = Identifier();
    }
    return proj;
  }

  Predicate ParsePredicate() {
    Predicate pred{Identifier(), CompareOp::kEq, Decimal()};
    const Token& op = Peek();
    static const std::map<std::string, CompareOp> ops = {
        {"=", CompareOp::kEq}, {"<", CompareOp::kLt},  {">", CompareOp::kGt},
        {"<=", CompareOp::kLe}, {">=", CompareOp::kGe},
    };
    auto it = op.kind == Token::Kind::kOperator ? ops.find(op.text) : ops.end();
    if (it == ops.end()) Fail(op, {"comparison operator"});
    Next();
    pred.op = it->second;
    const Token& lit = Peek();
    if (lit.kind == Token::Kind::kNumber) {
      pred.literal = *Decimal::Parse(lit.text);
    } else if (lit.kind == Token::Kind::kString) {
      pred.literal = lit.text;
    } else {
      Fail(lit, {"number", "text literal"});
    }
    Next();
    return pred;
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

std::string RenderLiteral(const Literal& lit) {
  if (auto* d = std::get_if<Decimal>(&lit)) return d->ToString();
  std::string out = "'";
  for (char c : std::get<std::string>(lit)) {
    if (c == '\'') out += '\'';
    out += c;
  }
  return out + "'";
}

std::string RenderSelect(const SelectStatement& stmt);

std::string RenderProjection(const Projection& p) {
  struct Visitor {
    std::string operator()(const ColumnRef& c) const { return c.name; }
    std::string operator()(const AllColumns&) const { return "*"; }
    std::string operator()(const AggregateCall& a) const {
      return std::string(AggregateName(a.fn)) + "(" + a.column.value_or("*") + ")";
    }
    std::string operator()(const Subquery& s) const {
      return "(" + RenderSelect(s.select()) + ")";
    }
  };
  std::string out = std::visit(Visitor{}, p.expr);
  if (p.alias) out += " AS " + *p.alias;
  return out;
}

std::string RenderSelect(const SelectStatement& stmt) {
  std::string out = "SELECT ";
  for (size_t i = 0; i < stmt.projections.size(); ++i) {
    if (i) out += ", ";
    out += RenderProjection(stmt.projections[i]);
  }
  if (stmt.from_table) out += " FROM " + *stmt.from_table;
  for (size_t i = 0; i < stmt.where.size(); ++i) {
    const auto& p = stmt.where[i];
    out += i ? " AND " : " WHERE ";
    out += p.column + " " + std::string(CompareOpText(p.op)) + " " + RenderLiteral(p.literal);
  }
  return out;
}

}  // namespace

std::vector<Token> Lex(std::string_view text) {
  std::vector<Token> tokens;
  size_t pos = 0;
  SqlError error(SqlError::Kind::kLexical, 0, "");
  while (true) {
    Token tok;
    if (!LexOne(text, pos, tok, &error)) throw error;
    tokens.push_back(tok);
    if (tok.kind == Token::Kind::kEnd) return tokens;
  }
}

std::vector<Token> LexPrefix(std::string_view text) {
  std::vector<Token> tokens;
  size_t pos = 0;
  Token tok;
  while (LexOne(text, pos, tok, nullptr) && tok.kind != Token::Kind::kEnd) {
    tokens.push_back(tok);
  }
  return tokens;
}

std::string_view AggregateName(Aggregate fn) {
  switch (fn) {
    case Aggregate::kMin: return "MIN";
    case Aggregate::kMax: return "MAX";
    case Aggregate::kCount: return "COUNT";
    case Aggregate::kSum: return "SUM";
    case Aggregate::kAvg: return "AVG";
  }
  return "?";
}

std::string_view CompareOpText(CompareOp op) {
  switch (op) {
    case CompareOp::kEq: return "=";
    case CompareOp::kLt: return "<";
    case CompareOp::kGt: return ">";
    case CompareOp::kLe: return "<=";
    case CompareOp::kGe: return ">=";
  }
  return "?";
}

Subquery::Subquery(SelectStatement select)
    : select_(std::make_unique<SelectStatement>(std::move(select))) {}
Subquery::Subquery(const Subquery& other)
    : select_(std::make_unique<SelectStatement>(*other.select_)) {}
Subquery& Subquery::operator=(const Subquery& other) {
  if (this != &other) select_ = std::make_unique<SelectStatement>(*other.select_);
  return *this;
}
Subquery::~Subquery() = default;

bool operator==(const Subquery& a, const Subquery& b) { return *a.select_ == *b.select_; }

SqlError::SqlError(Kind kind, size_t offset, std::string message,
                   std::vector<std::string> expected)
    : Error(message.empty() ? std::string() : "at byte " + std::to_string(offset) + ": " + message),
      kind_(kind),
      offset_(offset),
      expected_(std::move(expected)) {}

SelectStatement Parse(std::string_view text) { return Parser(text).ParseStatement(); }

std::string Render(const SelectStatement& stmt) { return RenderSelect(stmt) + ";"; }

std::string Normalize(std::string_view text) { return Render(Parse(text)); }

std::vector<std::string> ReferencedTables(const SelectStatement& stmt) {
  std::vector<std::string> tables;
  auto add = [&](const std::optional<std::string>& t) {
    if (t && std::find(tables.begin(), tables.end(), *t) == tables.end()) tables.push_back(*t);
  };
  add(stmt.from_table);
  for (const auto& p : stmt.projections) {
    if (auto* s = std::get_if<Subquery>(&p.expr)) add(s->select().from_table);
  }
  return tables;
}

}  // namespace netstate::sql
