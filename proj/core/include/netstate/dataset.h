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


#ifndef NETSTATE_DATASET_H_
#define NETSTATE_DATASET_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netstate/domain.h"
#include "netstate/error.h"
#include "netstate/network_state.h"
#include "netstate/pruner.h"
#include "netstate/sql.h"

namespace netstate {

// Declaration order is the canonical metric order.
enum class MetricKind {
  kIdleVnfCount,
  kMinE2eLatency,
  kMaxE2eLatency,
  kAvailableStorage,
  kAvailableCpu,
};

inline constexpr std::array<MetricKind, 5> kAllMetrics = {
    MetricKind::kIdleVnfCount, MetricKind::kMinE2eLatency, MetricKind::kMaxE2eLatency,
    MetricKind::kAvailableStorage, MetricKind::kAvailableCpu};

// "IdleVnfCount", "MinE2eLatency", ...
std::string_view MetricName(MetricKind metric);
MetricKind ParseMetric(std::string_view text);
// Output column label used in multi-metric queries: "idle_vnf_count", ...
std::string_view MetricLabel(MetricKind metric);
bool IsLatencyMetric(MetricKind metric);

// A sorted, duplicate-free set of one to three metrics.
using MetricSet = std::vector<MetricKind>;

// Every metric set of size 1, 2 and 3: 5 + 10 + 10 = 25 sets, ordered by
// size and then lexicographically in canonical metric order.
std::vector<MetricSet> AllMetricSets();

class DatasetError : public Error {
 public:
  using Error::Error;
};

// Ground-truth query for a metric set. One metric gives a plain SELECT;
// two or three give one SELECT of labelled scalar subqueries. Latency
// metrics need `sfc_type`; `dc_id` filters every metric when present.
sql::SelectStatement SqlFor(std::span<const MetricKind> metrics, std::optional<SfcType> sfc_type,
                            std::optional<int> dc_id);

// Natural-language question bank loaded from a template file.
class TemplateBank {
 public:
  // Compiled in from core/data/question_templates.json.
  static const TemplateBank& Default();
  static TemplateBank FromJson(std::string_view text);
  static TemplateBank Load(const std::filesystem::path& path);

  // Number of distinct phrasings for a metric set, with or without a DC.
  size_t ParaphraseCount(std::span<const MetricKind> metrics, bool has_dc) const;

  // Throws std::out_of_range when paraphrase_index >= ParaphraseCount.
  std::string Phrase(std::span<const MetricKind> metrics, std::optional<SfcType> sfc_type,
                     std::optional<int> dc_id, size_t paraphrase_index) const;

 private:
  struct PerMetric {
    std::vector<std::string> phrases;
    std::vector<std::string> single_dc;
    std::vector<std::string> single_all;
  };

  std::vector<std::string> lead_ins_;
  std::vector<std::string> loc_dc_;
  std::vector<std::string> loc_all_;
  std::array<PerMetric, kAllMetrics.size()> metrics_;
  std::array<std::vector<std::string>, 3> frames_;
};

enum class Split { kTrain, kValidation, kTest };
std::string_view SplitName(Split split);
Split ParseSplit(std::string_view text);

struct SplitSizes {
  size_t train;
  size_t validation;
  size_t test;
};

// 75 / 12.5 / 12.5. Throws DatasetError unless target >= 8 and divisible
// by 8.
SplitSizes ComputeSplitSizes(size_t target_size);

struct QueryRecord {
  std::string question;
  std::string schema_context;
  std::string sql;
  std::string answer;
  MetricSet metrics;
  std::optional<SfcType> sfc_type;
  std::optional<int> dc_id;
  Split split = Split::kTrain;
  int64_t step = 0;  // time_step of the source snapshot

  friend bool operator==(const QueryRecord&, const QueryRecord&) = default;
};

struct GenerateOptions {
  size_t target_size = 16568;
  uint64_t seed = 0;
  size_t budget_tokens = kDefaultTokenBudget;
  const TemplateBank* templates = nullptr;  // nullptr: TemplateBank::Default()
  const KeywordMap* keywords = nullptr;     // nullptr: KeywordMap::Default()
};

// Builds the corpus over the trajectory's snapshots. Records are spread
// evenly over the 25 metric sets (a set whose phrasings run out gets all
// of them and the rest is shared among the others), evenly over SFC types
// within latency sets, and split per metric set so that every split holds
// every metric set and every SFC type. Output is ordered by metric set,
// paraphrase, SFC type, DC and step.
std::vector<QueryRecord> Generate(std::span<const NetworkState> trajectory,
                                  const GenerateOptions& options);

// JSONL with the fields question, schema_context, sql, answer, metrics,
// sfc_type, dc_id, split, step. A record's id is its 0-based line number.
std::string RecordToJsonLine(const QueryRecord& record);
QueryRecord RecordFromJsonLine(std::string_view line);
void WriteCorpus(const std::filesystem::path& path, std::span<const QueryRecord> records);
std::vector<QueryRecord> ReadCorpus(const std::filesystem::path& path);

}  // namespace netstate

#endif  // NETSTATE_DATASET_H_
