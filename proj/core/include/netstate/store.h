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


#ifndef NETSTATE_STORE_H_
#define NETSTATE_STORE_H_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netstate/error.h"
#include "netstate/network_state.h"
#include "netstate/value.h"

namespace netstate {

struct ColumnSchema {
  std::string name;
  ColumnType type;

  friend bool operator==(const ColumnSchema&, const ColumnSchema&) = default;
};

struct TableSchema {
  std::string name;
  std::vector<ColumnSchema> columns;
  std::string primary_key;

  std::optional<size_t> ColumnIndex(std::string_view column) const;

  // CREATE TABLE statement, one column per line.
  std::string Ddl() const;

  friend bool operator==(const TableSchema&, const TableSchema&) = default;
};

// data_centers, vnf_instances, sfc_requests, sfc_catalog in that order.
std::span<const TableSchema> CanonicalSchema();
const TableSchema& CanonicalTable(std::string_view name);

class StoreError : public Error {
 public:
  enum class Kind {
    kMissingTable,
    kMissingColumn,
    kMissingKey,
    kDuplicateKey,
    kTypeMismatch,
    kKeyReassignment,
    kInvalidState,
    kMalformedCsv,
  };
  StoreError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

using Row = std::vector<Value>;

class Table {
 public:
  explicit Table(TableSchema schema);

  const TableSchema& schema() const { return schema_; }
  const std::vector<Row>& rows() const { return rows_; }
  size_t size() const { return rows_.size(); }

  // Index of the row whose primary key equals `key`, if any.
  std::optional<size_t> Find(const Value& key) const;

  void Insert(Row row);
  void Update(const Value& key, std::span<const std::pair<std::string, Value>> assignments);

  friend bool operator==(const Table& a, const Table& b) {
    return a.schema_ == b.schema_ && a.rows_ == b.rows_;
  }

 private:
  void CheckRow(const Row& row) const;

  TableSchema schema_;
  size_t key_column_;
  std::vector<Row> rows_;
  std::map<Value, size_t> key_index_;
};

// In-memory relational store: named tables with typed columns and
// single-column primary keys. Values are copyable snapshots.
class RelationalStore {
 public:
  RelationalStore() = default;

  // Empty store holding the four canonical tables, catalog rows included.
  static RelationalStore Canonical();

  // Materializes a snapshot. Throws StoreError(kInvalidState) listing the
  // violated invariants if the state is inconsistent.
  static RelationalStore Ingest(const NetworkState& state);

  // Inverse of Ingest for the three state tables.
  NetworkState Export() const;

  void AddTable(TableSchema schema);
  const Table* FindTable(std::string_view name) const;
  const Table& table(std::string_view name) const;
  std::vector<std::string> TableNames() const;

  void Insert(std::string_view table, Row row);

  // Changes only the addressed row. Primary-key columns cannot be assigned.
  void UpdateRow(std::string_view table, const Value& key,
                 std::span<const std::pair<std::string, Value>> assignments);

  int64_t time_step() const { return time_step_; }

  // One <table>.csv per table: header row of column names, then rows.
  void WriteCsv(const std::filesystem::path& dir) const;
  static RelationalStore ReadCsv(const std::filesystem::path& dir);

  friend bool operator==(const RelationalStore&, const RelationalStore&) = default;

 private:
  Table& MutableTable(std::string_view name);

  std::vector<Table> tables_;
  int64_t time_step_ = 0;
};

// Single-writer, multi-reader holder. Readers take an immutable snapshot;
// writers are serialized and publish a new snapshot when done.
class SharedStore {
 public:
  explicit SharedStore(RelationalStore store);

  std::shared_ptr<const RelationalStore> Snapshot() const;
  void UpdateRow(std::string_view table, const Value& key,
                 std::span<const std::pair<std::string, Value>> assignments);
  void Replace(RelationalStore store);

 private:
  mutable std::mutex publish_mu_;
  std::mutex writer_mu_;
  std::shared_ptr<const RelationalStore> current_;
};

}  // namespace netstate

#endif  // NETSTATE_STORE_H_
