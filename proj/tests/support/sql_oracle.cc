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


#include "sql_oracle.h"

#include <algorithm>
#include <cctype>

namespace oracle {
namespace {

using Kind = netstate::sql::ExecutionError::Kind;

constexpr int64_t kMicro = 1'000'000;
const char* const kTextPool[] = {"", "a", "ab", "b", "idle", "Z", "it's", "a b"};

int64_t Uniform(std::mt19937_64& rng, int64_t lo, int64_t hi) {
  return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
}

bool Chance(std::mt19937_64& rng, int percent) { return Uniform(rng, 0, 99) < percent; }

const char* ColName(Col c) {
  switch (c) {
    case Col::kId: return "id";
    case Col::kK: return "k";
    case Col::kX: return "x";
    case Col::kS: return "s";
  }
  return "?";
}

const char* FnName(Fn f) {
  switch (f) {
    case Fn::kMin: return "MIN";
    case Fn::kMax: return "MAX";
    case Fn::kCount: return "COUNT";
    case Fn::kSum: return "SUM";
    case Fn::kAvg: return "AVG";
  }
  return "?";
}

const char* OpText(Op o) {
  switch (o) {
    case Op::kEq: return "=";
    case Op::kLt: return "<";
    case Op::kGt: return ">";
    case Op::kLe: return "<=";
    case Op::kGe: return ">=";
  }
  return "?";
}

std::string MicrosText(int64_t m) {
  std::string out = m < 0 ? "-" : "";
  uint64_t mag = m < 0 ? uint64_t{0} - static_cast<uint64_t>(m) : static_cast<uint64_t>(m);
  out += std::to_string(mag / kMicro);
  uint64_t frac = mag % kMicro;
  if (frac) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%06llu", static_cast<unsigned long long>(frac));
    std::string digits = buf;
    while (digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

OVal Cell(const ORow& r, Col c) {
  switch (c) {
    case Col::kId: return {OVal::kInt, r.id, {}};
    case Col::kK: return {OVal::kInt, r.k, {}};
    case Col::kX: return {OVal::kDec, r.x_micros, {}};
    case Col::kS: return {OVal::kText, 0, r.s};
  }
  return {};
}

int64_t NumericMicros(const OVal& v) { return v.kind == OVal::kInt ? v.num * kMicro : v.num; }

bool Holds(int cmp, Op op) {
  switch (op) {
    case Op::kEq: return cmp == 0;
    case Op::kLt: return cmp < 0;
    case Op::kGt: return cmp > 0;
    case Op::kLe: return cmp <= 0;
    case Op::kGe: return cmp >= 0;
  }
  return false;
}

// Ordering of two non-null values of the same column.
int Order(const OVal& a, const OVal& b) {
  if (a.kind == OVal::kText) {
    // Bytewise, as unsigned characters.
    size_t n = std::min(a.text.size(), b.text.size());
    for (size_t i = 0; i < n; ++i) {
      auto x = static_cast<unsigned char>(a.text[i]);
      auto y = static_cast<unsigned char>(b.text[i]);
      if (x != y) return x < y ? -1 : 1;
    }
    return a.text.size() < b.text.size() ? -1 : (a.text.size() > b.text.size() ? 1 : 0);
  }
  int64_t x = NumericMicros(a);
  int64_t y = NumericMicros(b);
  return x < y ? -1 : (x > y ? 1 : 0);
}

struct Failure {
  Kind kind;
};

std::vector<const ORow*> Filter(const std::vector<OPred>& where, const std::vector<ORow>& rows) {
  for (const auto& p : where) {
    if (p.text_literal != (p.col == Col::kS)) throw Failure{Kind::kTypeMismatch};
  }
  std::vector<const ORow*> out;
  for (const auto& r : rows) {
    bool keep = true;
    for (const auto& p : where) {
      OVal cell = Cell(r, p.col);
      OVal lit = p.text_literal ? OVal{OVal::kText, 0, p.text} : OVal{OVal::kDec, p.num_micros, {}};
      keep = keep && Holds(Order(cell, lit), p.op);
    }
    if (keep) out.push_back(&r);
  }
  return out;
}

OVal Aggregate(const OItem& item, const std::vector<const ORow*>& rows) {
  if (item.fn == Fn::kCount) return {OVal::kInt, static_cast<int64_t>(rows.size()), {}};
  if (item.col == Col::kS && (item.fn == Fn::kSum || item.fn == Fn::kAvg)) {
    throw Failure{Kind::kTypeMismatch};
  }
  if (rows.empty()) return {};
  switch (item.fn) {
    case Fn::kMin:
    case Fn::kMax: {
      OVal best = Cell(*rows.front(), item.col);
      for (const ORow* r : rows) {
        OVal v = Cell(*r, item.col);
        int cmp = Order(v, best);
        if ((item.fn == Fn::kMin && cmp < 0) || (item.fn == Fn::kMax && cmp > 0)) best = v;
      }
      return best;
    }
    case Fn::kSum: {
      int64_t sum = 0;
      for (const ORow* r : rows) sum += Cell(*r, item.col).num;
      return {item.col == Col::kX ? OVal::kDec : OVal::kInt, sum, {}};
    }
    case Fn::kAvg: {
      __int128 sum = 0;
      for (const ORow* r : rows) sum += NumericMicros(Cell(*r, item.col));
      __int128 n = static_cast<__int128>(rows.size());
      // Round half away from zero: (2|s| + n) / 2n, sign restored.
      __int128 mag = sum < 0 ? -sum : sum;
      __int128 q = (2 * mag + n) / (2 * n);
      return {OVal::kDec, static_cast<int64_t>(sum < 0 ? -q : q), {}};
    }
    case Fn::kCount: break;
  }
  return {};
}

std::string ItemLabel(const OItem& item) {
  if (!item.alias.empty()) return item.alias;
  switch (item.kind) {
    case OItem::kColumn: return ColName(item.col);
    case OItem::kAgg:
      return std::string(FnName(item.fn)) + "(" + (item.count_star ? "*" : ColName(item.col)) + ")";
    case OItem::kSub: {
      OQuery inner{item.sub_item, true, item.sub_where};
      std::string text = Print(inner, false, nullptr);
      text.pop_back();
      return "(" + text + ")";
    }
    case OItem::kStar: break;
  }
  return "*";
}

Expected Run(const OQuery& q, const std::vector<ORow>& rows) {
  Expected e;
  std::vector<const ORow*> kept;
  if (q.has_from) kept = Filter(q.where, rows);
  const bool scalar = q.items.front().kind == OItem::kAgg || q.items.front().kind == OItem::kSub;
  if (scalar) {
    std::vector<OVal> out;
    for (const auto& item : q.items) {
      e.columns.push_back(ItemLabel(item));
      if (item.kind == OItem::kAgg) {
        out.push_back(Aggregate(item, kept));
        continue;
      }
      Expected sub = Run(OQuery{item.sub_item, true, item.sub_where}, rows);
      if (sub.rows.size() > 1) throw Failure{Kind::kCardinality};
      out.push_back(sub.rows.empty() ? OVal{} : sub.rows.front().front());
    }
    e.rows.push_back(std::move(out));
    return e;
  }
  for (const auto& item : q.items) {
    if (item.kind == OItem::kStar) {
      for (Col c : {Col::kId, Col::kK, Col::kX, Col::kS}) e.columns.push_back(ColName(c));
    } else {
      e.columns.push_back(ItemLabel(item));
    }
  }
  for (const ORow* r : kept) {
    std::vector<OVal> out;
    for (const auto& item : q.items) {
      if (item.kind == OItem::kStar) {
        for (Col c : {Col::kId, Col::kK, Col::kX, Col::kS}) out.push_back(Cell(*r, c));
      } else {
        out.push_back(Cell(*r, item.col));
      }
    }
    e.rows.push_back(std::move(out));
  }
  return e;
}

// Surface variation used by the scrambled printer.
std::string Word(std::string w, bool scrambled, std::mt19937_64* rng) {
  if (!scrambled) return w;
  int style = static_cast<int>(Uniform(*rng, 0, 2));
  for (auto& c : w) {
    unsigned char u = static_cast<unsigned char>(c);
    if (style == 0) c = static_cast<char>(std::tolower(u));
    if (style == 2 && Chance(*rng, 50)) c = static_cast<char>(std::tolower(u));
    if (style == 1) c = static_cast<char>(std::toupper(u));
  }
  return w;
}

std::string Gap(bool scrambled, std::mt19937_64* rng) {
  if (!scrambled) return " ";
  static const char* const kGaps[] = {" ", "  ", "\n", " \t", "\r\n  "};
  return kGaps[Uniform(*rng, 0, 4)];
}

std::string Tight(bool scrambled, std::mt19937_64* rng) {
  if (!scrambled || Chance(*rng, 60)) return "";
  return " ";
}

std::string Literal(const OPred& p, bool scrambled, std::mt19937_64* rng) {
  if (!p.text_literal) {
    std::string t = MicrosText(p.num_micros);
    if (scrambled && Chance(*rng, 25)) t += (t.find('.') == std::string::npos ? ".0" : "0");
    return t;
  }
  char quote = scrambled && Chance(*rng, 30) ? '"' : '\'';
  std::string out(1, quote);
  for (char c : p.text) {
    if (c == quote) out += quote;
    out += c;
  }
  return out + quote;
}

std::string PrintItem(const OItem& item, bool scrambled, std::mt19937_64* rng) {
  std::string out;
  switch (item.kind) {
    case OItem::kColumn: out = Word(ColName(item.col), scrambled, rng); break;
    case OItem::kStar: out = "*"; break;
    case OItem::kAgg:
      out = Word(FnName(item.fn), scrambled, rng) + Tight(scrambled, rng) + "(" +
            Tight(scrambled, rng) +
            (item.count_star ? std::string("*") : Word(ColName(item.col), scrambled, rng)) +
            Tight(scrambled, rng) + ")";
      break;
    case OItem::kSub: {
      std::string inner = Print(OQuery{item.sub_item, true, item.sub_where}, scrambled, rng);
      inner.pop_back();
      if (!inner.empty() && inner.back() == ' ') inner.pop_back();
      out = "(" + Tight(scrambled, rng) + inner + Tight(scrambled, rng) + ")";
      break;
    }
  }
  if (!item.alias.empty()) {
    out += Gap(scrambled, rng) + Word("AS", scrambled, rng) + Gap(scrambled, rng) +
           Word(item.alias, scrambled, rng);
  }
  return out;
}

Col RandomCol(std::mt19937_64& rng) { return static_cast<Col>(Uniform(rng, 0, 3)); }

OPred RandomPred(std::mt19937_64& rng, const std::vector<ORow>& rows, bool allow_mismatch) {
  OPred p;
  p.col = RandomCol(rng);
  p.op = static_cast<Op>(Uniform(rng, 0, 4));
  p.text_literal = p.col == Col::kS;
  if (allow_mismatch && Chance(rng, 3)) p.text_literal = !p.text_literal;
  const bool from_row = !rows.empty() && Chance(rng, 60);
  const ORow* r = from_row ? &rows[Uniform(rng, 0, static_cast<int64_t>(rows.size()) - 1)] : nullptr;
  if (p.text_literal) {
    p.text = (r && p.col == Col::kS) ? r->s : kTextPool[Uniform(rng, 0, 7)];
  } else if (r && p.col != Col::kS) {
    p.num_micros = NumericMicros(Cell(*r, p.col));
  } else if (p.col == Col::kX) {
    p.num_micros = Uniform(rng, -5000, 5000) * 1000;
  } else {
    p.num_micros = Uniform(rng, -20, 60) * kMicro + (Chance(rng, 10) ? kMicro / 2 : 0);
  }
  return p;
}

OItem RandomAgg(std::mt19937_64& rng) {
  OItem item;
  item.kind = OItem::kAgg;
  item.fn = static_cast<Fn>(Uniform(rng, 0, 4));
  item.col = RandomCol(rng);
  if (item.fn == Fn::kCount) item.count_star = Chance(rng, 50);
  if ((item.fn == Fn::kSum || item.fn == Fn::kAvg) && item.col == Col::kS && Chance(rng, 80)) {
    item.col = static_cast<Col>(Uniform(rng, 0, 2));
  }
  return item;
}

std::string RandomAlias(std::mt19937_64& rng) {
  static const char* const kAliases[] = {"c1", "val", "w", "total_x"};
  return kAliases[Uniform(rng, 0, 3)];
}

}  // namespace

std::string ToString(const OVal& v) {
  switch (v.kind) {
    case OVal::kNull: return "NULL";
    case OVal::kInt: return "int:" + std::to_string(v.num);
    case OVal::kDec: return "dec:" + MicrosText(v.num);
    case OVal::kText: return "text:'" + v.text + "'";
  }
  return "?";
}

OVal FromEngine(const netstate::Value& v) {
  if (std::holds_alternative<std::monostate>(v)) return {};
  if (auto* i = std::get_if<int64_t>(&v)) return {OVal::kInt, *i, {}};
  if (auto* d = std::get_if<netstate::Decimal>(&v)) return {OVal::kDec, d->micros(), {}};
  return {OVal::kText, 0, std::get<std::string>(v)};
}

Expected Evaluate(const OQuery& q, const std::vector<ORow>& rows) {
  try {
    return Run(q, rows);
  } catch (const Failure& f) {
    Expected e;
    e.error = f.kind;
    return e;
  }
}

std::string Print(const OQuery& q, bool scrambled, std::mt19937_64* rng) {
  std::string out = Word("SELECT", scrambled, rng) + Gap(scrambled, rng);
  for (size_t i = 0; i < q.items.size(); ++i) {
    if (i) out += scrambled ? Tight(scrambled, rng) + "," + Gap(scrambled, rng) : ", ";
    out += PrintItem(q.items[i], scrambled, rng);
  }
  if (q.has_from) {
    out += Gap(scrambled, rng) + Word("FROM", scrambled, rng) + Gap(scrambled, rng) +
           Word("t", scrambled, rng);
  }
  for (size_t i = 0; i < q.where.size(); ++i) {
    const auto& p = q.where[i];
    out += Gap(scrambled, rng) + Word(i ? "AND" : "WHERE", scrambled, rng) + Gap(scrambled, rng);
    out += Word(ColName(p.col), scrambled, rng) + (scrambled ? Tight(scrambled, rng) : " ") +
           OpText(p.op) + (scrambled ? Tight(scrambled, rng) : " ") + Literal(p, scrambled, rng);
  }
  if (!scrambled || Chance(*rng, 70)) {
    out += scrambled ? Tight(scrambled, rng) + ";" : ";";
  } else {
    out += " ";  // keeps pop_back() of nested prints harmless
  }
  return out;
}

netstate::RelationalStore BuildStore(const std::vector<ORow>& rows) {
  using netstate::ColumnType;
  netstate::RelationalStore store;
  store.AddTable({"t",
                  {{"id", ColumnType::kInteger},
                   {"k", ColumnType::kInteger},
                   {"x", ColumnType::kRational},
                   {"s", ColumnType::kText}},
                  "id"});
  for (const auto& r : rows) {
    store.Insert("t", {netstate::Value(r.id), netstate::Value(r.k),
                       netstate::Value(netstate::Decimal::FromMicros(r.x_micros)),
                       netstate::Value(r.s)});
  }
  return store;
}

Case RandomCase(std::mt19937_64& rng) {
  Case c;
  const int64_t n = Chance(rng, 10) ? 0 : Uniform(rng, 1, 50);
  std::vector<int64_t> ids;
  for (int64_t v = -20; v <= 200; ++v) ids.push_back(v);
  std::shuffle(ids.begin(), ids.end(), rng);
  for (int64_t i = 0; i < n; ++i) {
    c.rows.push_back({ids[i], Uniform(rng, -3, 3), Uniform(rng, -5000, 5000) * 1000,
                      kTextPool[Uniform(rng, 0, 7)]});
  }

  OQuery& q = c.query;
  const int shape = static_cast<int>(Uniform(rng, 0, 99));
  if (shape < 35) {
    for (int64_t i = Uniform(rng, 1, 3); i > 0; --i) {
      OItem item;
      if (Chance(rng, 15)) {
        item.kind = OItem::kStar;
      } else {
        item.col = RandomCol(rng);
        if (Chance(rng, 25)) item.alias = RandomAlias(rng);
      }
      q.items.push_back(item);
    }
  } else if (shape < 75) {
    for (int64_t i = Uniform(rng, 1, 3); i > 0; --i) {
      OItem item = RandomAgg(rng);
      if (Chance(rng, 25)) item.alias = RandomAlias(rng);
      q.items.push_back(item);
    }
  } else {
    q.has_from = false;
    for (int64_t i = Uniform(rng, 1, 3); i > 0; --i) {
      OItem item;
      item.kind = OItem::kSub;
      if (Chance(rng, 50)) {
        item.sub_item.push_back(RandomAgg(rng));
        for (int64_t j = Uniform(rng, 0, 2); j > 0; --j) {
          item.sub_where.push_back(RandomPred(rng, c.rows, false));
        }
      } else {
        OItem col;
        col.col = RandomCol(rng);
        item.sub_item.push_back(col);
        if (!c.rows.empty() && Chance(rng, 60)) {
          OPred p{Col::kId, Op::kEq, false,
                  c.rows[Uniform(rng, 0, n - 1)].id * kMicro, {}};
          item.sub_where.push_back(p);
        } else {
          for (int64_t j = Uniform(rng, 1, 2); j > 0; --j) {
            item.sub_where.push_back(RandomPred(rng, c.rows, false));
          }
        }
      }
      if (Chance(rng, 50)) item.alias = RandomAlias(rng);
      q.items.push_back(item);
    }
  }
  if (q.has_from) {
    for (int64_t j = Uniform(rng, 0, 3); j > 0; --j) q.where.push_back(RandomPred(rng, c.rows, true));
  }

  c.canonical = Print(q, false, nullptr);
  c.scrambled = Print(q, true, &rng);
  c.expected = Evaluate(q, c.rows);
  return c;
}

std::string Check(const Case& c) {
  using namespace netstate;
  auto store = BuildStore(c.rows);
  std::string normalized;
  sql::SelectStatement stmt;
  try {
    normalized = sql::Normalize(c.scrambled);
    stmt = sql::Parse(c.scrambled);
  } catch (const Error& e) {
    return "parse failed for [" + c.scrambled + "]: " + e.what();
  }
  if (normalized != c.canonical) {
    return "normalize mismatch: got [" + normalized + "] want [" + c.canonical + "]";
  }
  sql::QueryResult got;
  try {
    got = sql::Execute(stmt, store);
  } catch (const sql::ExecutionError& e) {
    if (c.expected.error == e.kind()) return "";
    return "unexpected execution error for " + c.canonical + ": " + e.what();
  }
  if (c.expected.error) return "expected an execution error for " + c.canonical;
  if (got.columns != c.expected.columns) return "column labels differ for " + c.canonical;
  if (got.rows.size() != c.expected.rows.size()) {
    return "row count " + std::to_string(got.rows.size()) + " vs " +
           std::to_string(c.expected.rows.size()) + " for " + c.canonical;
  }
  for (size_t i = 0; i < got.rows.size(); ++i) {
    if (got.rows[i].size() != c.expected.rows[i].size()) return "arity differs for " + c.canonical;
    for (size_t j = 0; j < got.rows[i].size(); ++j) {
      OVal v = FromEngine(got.rows[i][j]);
      if (!(v == c.expected.rows[i][j])) {
        return "row " + std::to_string(i) + " col " + std::to_string(j) + ": engine " +
               ToString(v) + " oracle " + ToString(c.expected.rows[i][j]) + " for " + c.canonical;
      }
    }
  }
  return "";
}

}  // namespace oracle
