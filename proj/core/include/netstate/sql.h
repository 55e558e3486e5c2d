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


#ifndef NETSTATE_SQL_H_
#define NETSTATE_SQL_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "netstate/error.h"
#include "netstate/store.h"
#include "netstate/value.h"

namespace netstate::sql {

// Grammar (keywords case-insensitive, identifiers folded to lower case):
//
//   select     := SELECT projection {"," projection} [FROM ident [where]] [";"]
//   projection := (ident | "*" | aggregate | "(" select ")") [AS ident]
//   aggregate  := COUNT "(" ("*" | ident) ")" | (MIN|MAX|SUM|AVG) "(" ident ")"
//   where      := WHERE ident op literal {AND ident op literal}
//   op         := "=" | "<" | ">" | "<=" | ">="
//   literal    := number | 'text' | "text"
//
// FROM may be omitted only when every projection is a subquery. Subqueries
// do not nest, carry one projection, and appear at most three times.

enum class Aggregate { kMin, kMax, kCount, kSum, kAvg };
enum class CompareOp { kEq, kLt, kGt, kLe, kGe };

std::string_view AggregateName(Aggregate fn);
std::string_view CompareOpText(CompareOp op);

using Literal = std::variant<Decimal, std::string>;

struct Predicate {
  std::string column;
  CompareOp op;
  Literal literal;

  friend bool operator==(const Predicate&, const Predicate&) = default;
};

struct SelectStatement;

struct ColumnRef {
  std::string name;
  friend bool operator==(const ColumnRef&, const ColumnRef&) = default;
};

struct AllColumns {
  friend bool operator==(const AllColumns&, const AllColumns&) = default;
};

struct AggregateCall {
  Aggregate fn;
  std::optional<std::string> column;  // nullopt means "*"
  friend bool operator==(const AggregateCall&, const AggregateCall&) = default;
};

// Owning, deep-copying pointer to a nested select.
class Subquery {
 public:
  explicit Subquery(SelectStatement select);
  Subquery(const Subquery& other);
  Subquery& operator=(const Subquery& other);
  Subquery(Subquery&&) noexcept = default;
  Subquery& operator=(Subquery&&) noexcept = default;
  ~Subquery();

  const SelectStatement& select() const { return *select_; }

  friend bool operator==(const Subquery& a, const Subquery& b);

 private:
  std::unique_ptr<SelectStatement> select_;
};

struct Projection {
  std::variant<ColumnRef, AllColumns, AggregateCall, Subquery> expr;
  std::optional<std::string> alias;

  bool IsScalar() const {
    return std::holds_alternative<AggregateCall>(expr) ||
           std::holds_alternative<Subquery>(expr);
  }
  friend bool operator==(const Projection&, const Projection&) = default;
};

struct SelectStatement {
  std::vector<Projection> projections;
  std::optional<std::string> from_table;
  std::vector<Predicate> where;

  friend bool operator==(const SelectStatement&, const SelectStatement&) = default;
};

class SqlError : public Error {
 public:
  enum class Kind { kLexical, kSyntax, kUnsupported };

  SqlError(Kind kind, size_t offset, std::string message,
           std::vector<std::string> expected = {});

  Kind kind() const { return kind_; }
  size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  Kind kind_;
  size_t offset_;
  std::vector<std::string> expected_;
};

SelectStatement Parse(std::string_view text);

// Canonical text: upper-case keywords, single spaces between clauses,
// "COUNT(*)" and "(SELECT ...)" without inner padding, ", " between
// projections, single-quoted text literals, trailing ";".
std::string Render(const SelectStatement& stmt);

// Render(Parse(text)). Idempotent.
std::string Normalize(std::string_view text);

// Lower-case table names the statement reads, subqueries included.
std::vector<std::string> ReferencedTables(const SelectStatement& stmt);

struct QueryResult {
  std::vector<std::string> columns;
  std::vector<Row> rows;

  friend bool operator==(const QueryResult&, const QueryResult&) = default;
};

class ExecutionError : public Error {
 public:
  enum class Kind { kUnknownTable, kUnknownColumn, kTypeMismatch, kCardinality };
  ExecutionError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Bag semantics over one table. Aggregate and subquery projections yield
// exactly one row; MIN/MAX/SUM/AVG of nothing are NULL, COUNT of nothing
// is 0. AVG rounds half away from zero to six decimals. Comparisons are
// exact; text orders bytewise.
QueryResult Execute(const SelectStatement& stmt, const RelationalStore& store);

// A single value as itself, a single row as "name=value, ...", anything
// else as CSV.
std::string RenderAnswer(const QueryResult& result);
std::string RenderCsv(const QueryResult& result);

// True if both results have the same arity and the same multiset of rows.
bool SameBag(const QueryResult& a, const QueryResult& b);

}  // namespace netstate::sql

#endif  // NETSTATE_SQL_H_
