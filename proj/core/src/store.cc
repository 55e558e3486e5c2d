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


#include "netstate/store.h"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace netstate {
namespace {

std::vector<TableSchema> BuildCanonicalSchema() {
  using T = ColumnType;
  return {
      {"data_centers",
       {{"dc_id", T::kInteger},
        {"total_storage_gb", T::kRational},
        {"available_storage_gb", T::kRational},
        {"total_cpu_units", T::kRational},
        {"available_cpu_units", T::kRational}},
       "dc_id"},
      {"vnf_instances",
       {{"vnf_id", T::kInteger},
        {"vnf_type", T::kText},
        {"dc_id", T::kInteger},
        {"status", T::kText},
        {"cpu_req", T::kRational},
        {"storage_req", T::kRational}},
       "vnf_id"},
      {"sfc_requests",
       {{"sfc_id", T::kInteger},
        {"sfc_type", T::kText},
        {"dc_id", T::kInteger},
        {"e2e_latency_ms", T::kRational},
        {"bandwidth_mbps", T::kRational},
        {"status", T::kText}},
       "sfc_id"},
      {"sfc_catalog",
       {{"sfc_type", T::kText},
        {"vnf_sequence", T::kText},
        {"bandwidth_mbps", T::kText},
        {"max_e2e_ms", T::kRational},
        {"bundle_min", T::kInteger},
        {"bundle_max", T::kInteger}},
       "sfc_type"},
  };
}

std::string RenderBandwidth(const Range<Decimal>& r) {
  if (r.IsPoint()) return r.min.ToString();
  return r.min.ToString() + "-" + r.max.ToString();
}

std::string CsvField(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Splits CSV text into records of fields (RFC 4180 quoting).
std::vector<std::vector<std::string>> ParseCsv(const std::string& text,
                                               const std::string& source) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty()) {
          throw StoreError(StoreError::Kind::kMalformedCsv,
                           source + ": stray quote inside field");
        }
        quoted = true;
        field_started = true;
        break;
      case ',':
        record.push_back(std::move(field));
        field.clear();
        field_started = true;
        break;
      case '\r':
        break;
      case '\n':
        if (field_started || !field.empty() || !record.empty()) {
          record.push_back(std::move(field));
          records.push_back(std::move(record));
        }
        field.clear();
        record.clear();
        field_started = false;
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (quoted) throw StoreError(StoreError::Kind::kMalformedCsv, source + ": unterminated quote");
  if (field_started || !field.empty() || !record.empty()) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace

std::optional<size_t> TableSchema::ColumnIndex(std::string_view column) const {
  for (size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].name == column) return i;
  }
  return std::nullopt;
}

std::string TableSchema::Ddl() const {
  std::string out = "CREATE TABLE " + name + " (\n";
  for (size_t i = 0; i < columns.size(); ++i) {
    out += "  " + columns[i].name + " " + std::string(ColumnTypeName(columns[i].type));
    if (columns[i].name == primary_key) out += " PRIMARY KEY";
    out += i + 1 < columns.size() ? ",\n" : "\n";
  }
  out += ");";
  return out;
}

std::span<const TableSchema> CanonicalSchema() {
  static const std::vector<TableSchema> schema = BuildCanonicalSchema();
  return schema;
}

const TableSchema& CanonicalTable(std::string_view name) {
  for (const auto& t : CanonicalSchema()) {
    if (t.name == name) return t;
  }
  throw StoreError(StoreError::Kind::kMissingTable, "no canonical table " + std::string(name));
}

Table::Table(TableSchema schema) : schema_(std::move(schema)) {
  std::vector<std::string> names;
  for (const auto& c : schema_.columns) {
    if (std::find(names.begin(), names.end(), c.name) != names.end()) {
      throw StoreError(StoreError::Kind::kInvalidState,
                       "duplicate column " + c.name + " in " + schema_.name);
    }
    names.push_back(c.name);
  }
  auto key = schema_.ColumnIndex(schema_.primary_key);
  if (!key) {
    throw StoreError(StoreError::Kind::kMissingColumn,
                     "primary key " + schema_.primary_key + " is not a column of " + schema_.name);
  }
  key_column_ = *key;
}

std::optional<size_t> Table::Find(const Value& key) const {
  Value k = CoerceTo(key, schema_.columns[key_column_].type);
  auto it = key_index_.find(k);
  if (it == key_index_.end()) return std::nullopt;
  return it->second;
}

void Table::CheckRow(const Row& row) const {
  if (row.size() != schema_.columns.size()) {
    throw StoreError(StoreError::Kind::kTypeMismatch,
                     schema_.name + ": row has " + std::to_string(row.size()) + " cells, expected " +
                         std::to_string(schema_.columns.size()));
  }
  for (size_t i = 0; i < row.size(); ++i) {
    if (!ConformsTo(row[i], schema_.columns[i].type)) {
      throw StoreError(StoreError::Kind::kTypeMismatch,
                       schema_.name + "." + schema_.columns[i].name + " expects " +
                           std::string(ColumnTypeName(schema_.columns[i].type)) + ", got '" +
                           RenderValue(row[i]) + "'");
    }
  }
}

void Table::Insert(Row row) {
  CheckRow(row);
  for (size_t i = 0; i < row.size(); ++i) row[i] = CoerceTo(row[i], schema_.columns[i].type);
  const Value& key = row[key_column_];
  if (key_index_.contains(key)) {
    throw StoreError(StoreError::Kind::kDuplicateKey,
                     schema_.name + ": duplicate primary key " + RenderValue(key));
  }
  key_index_.emplace(key, rows_.size());
  rows_.push_back(std::move(row));
}

void Table::Update(const Value& key,
                   std::span<const std::pair<std::string, Value>> assignments) {
  auto at = Find(key);
  if (!at) {
    throw StoreError(StoreError::Kind::kMissingKey,
                     schema_.name + ": no row with " + schema_.primary_key + " = " +
                         RenderValue(key));
  }
  Row updated = rows_[*at];
  for (const auto& [column, value] : assignments) {
    auto idx = schema_.ColumnIndex(column);
    if (!idx) {
      throw StoreError(StoreError::Kind::kMissingColumn,
                       schema_.name + " has no column " + column);
    }
    if (*idx == key_column_) {
      throw StoreError(StoreError::Kind::kKeyReassignment,
                       schema_.name + ": primary key " + column + " cannot be reassigned");
    }
    if (!ConformsTo(value, schema_.columns[*idx].type)) {
      throw StoreError(StoreError::Kind::kTypeMismatch,
                       schema_.name + "." + column + " expects " +
                           std::string(ColumnTypeName(schema_.columns[*idx].type)) + ", got '" +
                           RenderValue(value) + "'");
    }
    updated[*idx] = CoerceTo(value, schema_.columns[*idx].type);
  }
  rows_[*at] = std::move(updated);
}

RelationalStore RelationalStore::Canonical() {
  RelationalStore store;
  for (const auto& schema : CanonicalSchema()) store.AddTable(schema);
  for (const auto& e : Catalog()) {
    store.Insert("sfc_catalog",
                 {std::string(SfcName(e.sfc_type)), RenderVnfSequence(e.vnf_sequence),
                  RenderBandwidth(e.bandwidth_mbps), e.max_e2e_ms,
                  int64_t{e.bundle_range.min}, int64_t{e.bundle_range.max}});
  }
  return store;
}

RelationalStore RelationalStore::Ingest(const NetworkState& state) {
  auto problems = CheckInvariants(state);
  if (!problems.empty()) {
    std::string msg = "state at step " + std::to_string(state.time_step) + " is inconsistent:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw StoreError(StoreError::Kind::kInvalidState, msg);
  }
  RelationalStore store = Canonical();
  store.time_step_ = state.time_step;
  for (const auto& dc : state.data_centers) {
    store.Insert("data_centers", {int64_t{dc.spec.dc_id}, dc.spec.total_storage_gb,
                                  dc.available_storage_gb, dc.spec.total_cpu_units,
                                  dc.available_cpu_units});
  }
  for (const auto& v : state.vnf_instances) {
    store.Insert("vnf_instances",
                 {v.vnf_id, std::string(VnfName(v.vnf_type)), int64_t{v.dc_id},
                  std::string(StatusName(v.status)), v.cpu_req, v.storage_req});
  }
  for (const auto& r : state.sfc_requests) {
    store.Insert("sfc_requests",
                 {r.sfc_id, std::string(SfcName(r.sfc_type)), int64_t{r.dc_id}, r.e2e_latency_ms,
                  r.bandwidth_mbps, std::string(StatusName(r.status))});
  }
  return store;
}

NetworkState RelationalStore::Export() const {
  auto dec = [](const Value& v) { return std::get<Decimal>(v); };
  auto integer = [](const Value& v) { return std::get<int64_t>(v); };
  auto text = [](const Value& v) { return std::get<std::string>(v); };

  NetworkState state;
  state.time_step = time_step_;
  for (const auto& row : table("data_centers").rows()) {
    DataCenterState dc;
    dc.spec.dc_id = static_cast<int>(integer(row[0]));
    dc.spec.total_storage_gb = dec(row[1]);
    dc.available_storage_gb = dec(row[2]);
    dc.spec.total_cpu_units = dec(row[3]);
    dc.available_cpu_units = dec(row[4]);
    state.data_centers.push_back(dc);
  }
  for (const auto& row : table("vnf_instances").rows()) {
    state.vnf_instances.push_back({integer(row[0]), ParseVnfType(text(row[1])),
                                   static_cast<int>(integer(row[2])),
                                   ParseVnfStatus(text(row[3])), dec(row[4]), dec(row[5])});
  }
  for (const auto& row : table("sfc_requests").rows()) {
    state.sfc_requests.push_back({integer(row[0]), ParseSfcType(text(row[1])),
                                  static_cast<int>(integer(row[2])), dec(row[3]), dec(row[4]),
                                  ParseRequestStatus(text(row[5]))});
  }
  return state;
}

void RelationalStore::AddTable(TableSchema schema) {
  if (FindTable(schema.name)) {
    throw StoreError(StoreError::Kind::kInvalidState, "table " + schema.name + " already exists");
  }
  tables_.emplace_back(std::move(schema));
}

const Table* RelationalStore::FindTable(std::string_view name) const {
  for (const auto& t : tables_) {
    if (t.schema().name == name) return &t;
  }
  return nullptr;
}

const Table& RelationalStore::table(std::string_view name) const {
  if (const Table* t = FindTable(name)) return *t;
  throw StoreError(StoreError::Kind::kMissingTable, "no table " + std::string(name));
}

Table& RelationalStore::MutableTable(std::string_view name) {
  return const_cast<Table&>(table(name));
}

std::vector<std::string> RelationalStore::TableNames() const {
  std::vector<std::string> names;
  for (const auto& t : tables_) names.push_back(t.schema().name);
  return names;
}

void RelationalStore::Insert(std::string_view table, Row row) {
  MutableTable(table).Insert(std::move(row));
}

void RelationalStore::UpdateRow(std::string_view table, const Value& key,
                                std::span<const std::pair<std::string, Value>> assignments) {
  MutableTable(table).Update(key, assignments);
}

void RelationalStore::WriteCsv(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  for (const auto& t : tables_) {
    auto path = dir / (t.schema().name + ".csv");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    const auto& cols = t.schema().columns;
    for (size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << CsvField(cols[i].name);
    out << '\n';
    for (const auto& row : t.rows()) {
      for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << CsvField(RenderValue(row[i]));
      out << '\n';
    }
    if (!out) throw Error("failed writing " + path.string());
  }
}

RelationalStore RelationalStore::ReadCsv(const std::filesystem::path& dir) {
  RelationalStore store;
  for (const auto& schema : CanonicalSchema()) {
    auto path = dir / (schema.name + ".csv");
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw StoreError(StoreError::Kind::kMissingTable, "missing " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    auto records = ParseCsv(buf.str(), path.string());
    if (records.empty()) {
      throw StoreError(StoreError::Kind::kMalformedCsv, path.string() + ": no header row");
    }
    std::vector<std::string> expected;
    for (const auto& c : schema.columns) expected.push_back(c.name);
    if (records.front() != expected) {
      throw StoreError(StoreError::Kind::kMalformedCsv,
                       path.string() + ": header does not match the " + schema.name + " schema");
    }
    store.AddTable(schema);
    for (size_t r = 1; r < records.size(); ++r) {
      const auto& fields = records[r];
      if (fields.size() != schema.columns.size()) {
        throw StoreError(StoreError::Kind::kMalformedCsv,
                         path.string() + ": line " + std::to_string(r + 1) + " has " +
                             std::to_string(fields.size()) + " fields");
      }
      Row row;
      for (size_t i = 0; i < fields.size(); ++i) {
        auto cell = ParseCell(fields[i], schema.columns[i].type);
        if (!cell) {
          throw StoreError(StoreError::Kind::kTypeMismatch,
                           path.string() + ": line " + std::to_string(r + 1) + " column " +
                               schema.columns[i].name + ": bad value '" + fields[i] + "'");
        }
        row.push_back(std::move(*cell));
      }
      store.Insert(schema.name, std::move(row));
    }
  }
  return store;
}

SharedStore::SharedStore(RelationalStore store)
    : current_(std::make_shared<const RelationalStore>(std::move(store))) {}

std::shared_ptr<const RelationalStore> SharedStore::Snapshot() const {
  std::lock_guard lock(publish_mu_);
  return current_;
}

void SharedStore::UpdateRow(std::string_view table, const Value& key,
                            std::span<const std::pair<std::string, Value>> assignments) {
  std::lock_guard writer(writer_mu_);
  auto next = std::make_shared<RelationalStore>(*Snapshot());
  next->UpdateRow(table, key, assignments);
  std::lock_guard lock(publish_mu_);
  current_ = std::move(next);
}

void SharedStore::Replace(RelationalStore store) {
  std::lock_guard writer(writer_mu_);
  auto next = std::make_shared<const RelationalStore>(std::move(store));
  std::lock_guard lock(publish_mu_);
  current_ = std::move(next);
}

}  // namespace netstate
