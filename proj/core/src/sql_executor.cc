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

#include "netstate/sql.h"

namespace netstate::sql {
namespace {

using Kind = ExecutionError::Kind;

struct BoundPredicate {
  size_t column;
  CompareOp op;
  Value literal;  // Decimal or string
};

bool Compare(int cmp, CompareOp op) {
  switch (op) {
    case CompareOp::kEq: return cmp == 0;
    case CompareOp::kLt: return cmp < 0;
    case CompareOp::kGt: return cmp > 0;
    case CompareOp::kLe: return cmp <= 0;
    case CompareOp::kGe: return cmp >= 0;
  }
  return false;
}

int ThreeWay(const Value& cell, const Value& literal) {
  if (auto* s = std::get_if<std::string>(&literal)) {
    return std::get<std::string>(cell).compare(*s) < 0   ? -1
           : std::get<std::string>(cell).compare(*s) > 0 ? 1
                                                         : 0;
  }
  Decimal a = *AsDecimal(cell);
  Decimal b = std::get<Decimal>(literal);
  return a < b ? -1 : (a > b ? 1 : 0);
}

size_t ResolveColumn(const Table& table, const std::string& column) {
  auto idx = table.schema().ColumnIndex(column);
  if (!idx) {
    throw ExecutionError(Kind::kUnknownColumn,
                         "table " + table.schema().name + " has no column " + column);
  }
  return *idx;
}

const Table& ResolveTable(const RelationalStore& store, const std::string& name) {
  const Table* t = store.FindTable(name);
  if (!t) throw ExecutionError(Kind::kUnknownTable, "no such table: " + name);
  return *t;
}

std::vector<const Row*> FilterRows(const Table& table, const std::vector<Predicate>& where) {
  std::vector<BoundPredicate> bound;
  for (const auto& p : where) {
    size_t col = ResolveColumn(table, p.column);
    ColumnType type = table.schema().columns[col].type;
    bool text_literal = std::holds_alternative<std::string>(p.literal);
    if (text_literal != (type == ColumnType::kText)) {
      throw ExecutionError(Kind::kTypeMismatch,
                           "cannot compare " + std::string(ColumnTypeName(type)) + " column " +
                               p.column + " with " + (text_literal ? "a text" : "a numeric") +
                               " literal");
    }
    Value lit = text_literal ? Value(std::get<std::string>(p.literal))
                             : Value(std::get<Decimal>(p.literal));
    bound.push_back({col, p.op, std::move(lit)});
  }
  std::vector<const Row*> rows;
  for (const auto& row : table.rows()) {
    bool keep = std::all_of(bound.begin(), bound.end(), [&](const BoundPredicate& b) {
      return Compare(ThreeWay(row[b.column], b.literal), b.op);
    });
    if (keep) rows.push_back(&row);
  }
  return rows;
}

Value Fold(const AggregateCall& call, const Table& table, const std::vector<const Row*>& rows) {
  if (call.fn == Aggregate::kCount) {
    if (call.column) ResolveColumn(table, *call.column);
    return static_cast<int64_t>(rows.size());
  }
  size_t col = ResolveColumn(table, *call.column);
  ColumnType type = table.schema().columns[col].type;
  if (type == ColumnType::kText && (call.fn == Aggregate::kSum || call.fn == Aggregate::kAvg)) {
    throw ExecutionError(Kind::kTypeMismatch, std::string(AggregateName(call.fn)) +
                                                  " needs a numeric column, " + *call.column +
                                                  " is TEXT");
  }
  if (rows.empty()) return std::monostate{};

  switch (call.fn) {
    case Aggregate::kMin:
    case Aggregate::kMax: {
      const Value* best = &(*rows.front())[col];
      for (const Row* r : rows) {
        const Value& v = (*r)[col];
        int cmp = type == ColumnType::kText ? std::get<std::string>(v).compare(
                                                  std::get<std::string>(*best))
                                            : (*AsDecimal(v) < *AsDecimal(*best)     ? -1
                                               : *AsDecimal(v) > *AsDecimal(*best) ? 1
                                                                                   : 0);
        if ((call.fn == Aggregate::kMin && cmp < 0) || (call.fn == Aggregate::kMax && cmp > 0)) {
          best = &v;
        }
      }
      return *best;
    }
    case Aggregate::kSum: {
      if (type == ColumnType::kInteger) {
        int64_t sum = 0;
        for (const Row* r : rows) {
          if (__builtin_add_overflow(sum, std::get<int64_t>((*r)[col]), &sum)) {
            throw std::overflow_error("SUM overflow");
          }
        }
        return sum;
      }
      Decimal sum;
      for (const Row* r : rows) sum += *AsDecimal((*r)[col]);
      return sum;
    }
    case Aggregate::kAvg: {
      Decimal sum;
      for (const Row* r : rows) sum += *AsDecimal((*r)[col]);
      return sum.DivideRounded(static_cast<int64_t>(rows.size()));
    }
    case Aggregate::kCount: break;
  }
  return std::monostate{};
}

std::string ColumnLabel(const Projection& p) {
  if (p.alias) return *p.alias;
  if (auto* c = std::get_if<ColumnRef>(&p.expr)) return c->name;
  if (auto* a = std::get_if<AggregateCall>(&p.expr)) {
    return std::string(AggregateName(a->fn)) + "(" + a->column.value_or("*") + ")";
  }
  std::string text = Render(std::get<Subquery>(p.expr).select());
  text.pop_back();  // trailing ';'
  return "(" + text + ")";
}

}  // namespace

QueryResult Execute(const SelectStatement& stmt, const RelationalStore& store) {
  const Table* table = stmt.from_table ? &ResolveTable(store, *stmt.from_table) : nullptr;
  std::vector<const Row*> rows;
  if (table) rows = FilterRows(*table, stmt.where);

  QueryResult result;
  bool scalar = !stmt.projections.empty() && stmt.projections.front().IsScalar();
  if (scalar) {
    Row out;
    for (const auto& p : stmt.projections) {
      result.columns.push_back(ColumnLabel(p));
      if (auto* call = std::get_if<AggregateCall>(&p.expr)) {
        out.push_back(Fold(*call, *table, rows));
        continue;
      }
      QueryResult sub = Execute(std::get<Subquery>(p.expr).select(), store);
      if (sub.rows.size() > 1) {
        throw ExecutionError(Kind::kCardinality,
                             "scalar subquery returned " + std::to_string(sub.rows.size()) +
                                 " rows");
      }
      out.push_back(sub.rows.empty() ? Value(std::monostate{}) : sub.rows.front().front());
    }
    result.rows.push_back(std::move(out));
    return result;
  }

  std::vector<size_t> columns;
  for (const auto& p : stmt.projections) {
    if (std::holds_alternative<AllColumns>(p.expr)) {
      for (size_t i = 0; i < table->schema().columns.size(); ++i) {
        columns.push_back(i);
        result.columns.push_back(table->schema().columns[i].name);
      }
    } else {
      columns.push_back(ResolveColumn(*table, std::get<ColumnRef>(p.expr).name));
      result.columns.push_back(ColumnLabel(p));
    }
  }
  for (const Row* r : rows) {
    Row out;
    for (size_t c : columns) out.push_back((*r)[c]);
    result.rows.push_back(std::move(out));
  }
  return result;
}

std::string RenderCsv(const QueryResult& result) {
  auto field = [](const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  std::string out;
  for (size_t i = 0; i < result.columns.size(); ++i) {
    out += (i ? "," : "") + field(result.columns[i]);
  }
  for (const auto& row : result.rows) {
    out += '\n';
    for (size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + field(RenderValue(row[i]));
  }
  return out;
}

std::string RenderAnswer(const QueryResult& result) {
  if (result.rows.size() == 1 && result.columns.size() == 1) {
    return RenderValue(result.rows.front().front());
  }
  if (result.rows.size() == 1) {
    std::string out;
    for (size_t i = 0; i < result.columns.size(); ++i) {
      if (i) out += ", ";
      out += result.columns[i] + "=" + RenderValue(result.rows.front()[i]);
    }
    return out;
  }
  return RenderCsv(result);
}

bool SameBag(const QueryResult& a, const QueryResult& b) {
  if (a.columns.size() != b.columns.size() || a.rows.size() != b.rows.size()) return false;
  auto x = a.rows, y = b.rows;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

}  // namespace netstate::sql
