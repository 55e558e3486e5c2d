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


#include "netstate/dataset.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "net_oracle.h"
#include "netstate/placement.h"

namespace netstate {
namespace {

std::vector<NetworkState> Trajectory(int steps = 30) {
  Scenario s = Scenario::Load(std::filesystem::path(NETSTATE_SOURCE_DIR) / "scenarios/three_dc.json");
  return netstate::Run(s, steps, 17);
}

// Answers computed straight from the snapshot, without the SQL engine.
std::string DirectAnswer(const QueryRecord& r, const NetworkState& s) {
  std::vector<std::string> parts;
  for (MetricKind m : r.metrics) {
    std::string value;
    switch (m) {
      case MetricKind::kIdleVnfCount: {
        int64_t n = 0;
        for (const auto& v : s.vnf_instances) {
          if (v.status == VnfStatus::kIdle && (!r.dc_id || v.dc_id == *r.dc_id)) ++n;
        }
        value = std::to_string(n);
        break;
      }
      case MetricKind::kMinE2eLatency:
      case MetricKind::kMaxE2eLatency: {
        std::optional<int64_t> best;
        for (const auto& q : s.sfc_requests) {
          if (q.sfc_type != *r.sfc_type || (r.dc_id && q.dc_id != *r.dc_id)) continue;
          int64_t v = q.e2e_latency_ms.micros();
          if (!best || (m == MetricKind::kMinE2eLatency ? v < *best : v > *best)) best = v;
        }
        value = best ? Decimal::FromMicros(*best).ToString() : "NULL";
        break;
      }
      case MetricKind::kAvailableStorage:
      case MetricKind::kAvailableCpu: {
        int64_t sum = 0;
        for (const auto& dc : s.data_centers) {
          if (r.dc_id && dc.spec.dc_id != *r.dc_id) continue;
          sum += (m == MetricKind::kAvailableStorage ? dc.available_storage_gb : dc.available_cpu_units)
                     .micros();
        }
        value = Decimal::FromMicros(sum).ToString();
        break;
      }
    }
    parts.push_back(r.metrics.size() == 1 ? value : std::string(MetricLabel(m)) + "=" + value);
  }
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out;
}

TEST(SplitTest, PublishedSizes) {
  SplitSizes s = ComputeSplitSizes(oracle::kReferenceDatasetSize);
  EXPECT_EQ(s.train, 12426u);
  EXPECT_EQ(s.validation, oracle::kReferenceTestTotal);
  EXPECT_EQ(s.test, oracle::kReferenceTestTotal);
  SplitSizes small = ComputeSplitSizes(8);
  EXPECT_EQ(small.train, 6u);
  EXPECT_EQ(small.validation, 1u);
  EXPECT_EQ(small.test, 1u);
  for (size_t bad : {0, 7, 12, 16570}) EXPECT_THROW(ComputeSplitSizes(bad), DatasetError) << bad;
}

TEST(SplitTest, NamesRoundTrip) {
  for (Split s : {Split::kTrain, Split::kValidation, Split::kTest}) {
    EXPECT_EQ(ParseSplit(SplitName(s)), s);
  }
  EXPECT_THROW(ParseSplit("dev"), UnknownNameError);
}

TEST(MetricTest, TwentyFiveSortedSets) {
  auto sets = AllMetricSets();
  ASSERT_EQ(sets.size(), 25u);
  std::set<MetricSet> unique(sets.begin(), sets.end());
  EXPECT_EQ(unique.size(), 25u);
  std::map<size_t, int> by_size;
  for (const auto& s : sets) {
    EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
    ++by_size[s.size()];
  }
  EXPECT_EQ(by_size[1], 5);
  EXPECT_EQ(by_size[2], 10);
  EXPECT_EQ(by_size[3], 10);
  for (MetricKind m : kAllMetrics) EXPECT_EQ(ParseMetric(MetricName(m)), m);
}

TEST(SqlForTest, SingleMetricQueries) {
  using M = MetricKind;
  auto text = [](std::vector<M> m, std::optional<SfcType> sfc, std::optional<int> dc) {
    return sql::Render(SqlFor(m, sfc, dc));
  };
  EXPECT_EQ(text({M::kIdleVnfCount}, std::nullopt, 2),
            "SELECT COUNT(*) FROM vnf_instances WHERE status = 'idle' AND dc_id = 2;");
  EXPECT_EQ(text({M::kIdleVnfCount}, std::nullopt, std::nullopt),
            "SELECT COUNT(*) FROM vnf_instances WHERE status = 'idle';");
  EXPECT_EQ(text({M::kMinE2eLatency}, SfcType::kInd40, std::nullopt),
            "SELECT MIN(e2e_latency_ms) FROM sfc_requests WHERE sfc_type = 'Ind4.0';");
  EXPECT_EQ(text({M::kMaxE2eLatency}, SfcType::kVoip, 3),
            "SELECT MAX(e2e_latency_ms) FROM sfc_requests WHERE sfc_type = 'VoIP' AND dc_id = 3;");
  EXPECT_EQ(text({M::kAvailableStorage}, std::nullopt, 1),
            "SELECT available_storage_gb FROM data_centers WHERE dc_id = 1;");
  EXPECT_EQ(text({M::kAvailableCpu}, std::nullopt, std::nullopt),
            "SELECT SUM(available_cpu_units) FROM data_centers;");
}

TEST(SqlForTest, CombinationsAreLabelledSubqueries) {
  using M = MetricKind;
  std::vector<M> metrics = {M::kAvailableCpu, M::kIdleVnfCount};  // order-insensitive
  EXPECT_EQ(sql::Render(SqlFor(metrics, std::nullopt, 1)),
            "SELECT (SELECT COUNT(*) FROM vnf_instances WHERE status = 'idle' AND dc_id = 1) AS "
            "idle_vnf_count, (SELECT available_cpu_units FROM data_centers WHERE dc_id = 1) AS "
            "available_cpu_units;");
  std::vector<M> none;
  std::vector<M> dup = {M::kIdleVnfCount, M::kIdleVnfCount};
  std::vector<M> four = {M::kIdleVnfCount, M::kMinE2eLatency, M::kAvailableCpu, M::kAvailableStorage};
  std::vector<M> lat = {M::kMaxE2eLatency};
  EXPECT_THROW(SqlFor(none, std::nullopt, 1), DatasetError);
  EXPECT_THROW(SqlFor(dup, std::nullopt, 1), DatasetError);
  EXPECT_THROW(SqlFor(four, SfcType::kCg, 1), DatasetError);
  EXPECT_THROW(SqlFor(lat, std::nullopt, 1), DatasetError);
}

TEST(TemplateTest, ParaphrasesAreDistinctAndFilled) {
  const TemplateBank& bank = TemplateBank::Default();
  for (const auto& set : AllMetricSets()) {
    for (bool has_dc : {false, true}) {
      size_t n = bank.ParaphraseCount(set, has_dc);
      ASSERT_GE(n, 4u);
      std::optional<int> dc;
      if (has_dc) dc = 7;
      std::set<std::string> seen;
      for (size_t i = 0; i < n; ++i) {
        std::string q = bank.Phrase(set, SfcType::kMiot, dc, i);
        EXPECT_EQ(q.find('{'), std::string::npos) << q;
        EXPECT_TRUE(seen.insert(q).second) << q;
        EXPECT_EQ(q.find("7") != std::string::npos, has_dc) << q;
      }
      EXPECT_THROW(bank.Phrase(set, SfcType::kMiot, dc, n), std::out_of_range);
    }
  }
  std::vector<MetricKind> idle = {MetricKind::kIdleVnfCount};
  EXPECT_EQ(bank.Phrase(idle, std::nullopt, 1, 0),
            "How many idle VNFs are currently available at data center 1?");
  std::vector<MetricKind> lat = {MetricKind::kMinE2eLatency};
  EXPECT_THROW(bank.Phrase(lat, std::nullopt, 1, 0), DatasetError);
}

TEST(TemplateTest, RejectsBrokenTemplateFiles) {
  EXPECT_THROW(TemplateBank::FromJson("[]"), ConfigError);
  EXPECT_THROW(TemplateBank::FromJson(R"({"lead_ins": [""]})"), ConfigError);
  EXPECT_THROW(TemplateBank::Load("/nonexistent/templates.json"), ConfigError);
}

class GenerateTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    traj_ = new std::vector<NetworkState>(Trajectory());
    GenerateOptions opts;
    opts.target_size = 400;
    opts.seed = 3;
    records_ = new std::vector<QueryRecord>(Generate(*traj_, opts));
  }
  static void TearDownTestSuite() {
    delete records_;
    delete traj_;
  }
  static std::vector<NetworkState>* traj_;
  static std::vector<QueryRecord>* records_;
};
std::vector<NetworkState>* GenerateTest::traj_ = nullptr;
std::vector<QueryRecord>* GenerateTest::records_ = nullptr;

TEST_F(GenerateTest, SizesAndSplits) {
  ASSERT_EQ(records_->size(), 400u);
  std::map<Split, size_t> counts;
  for (const auto& r : *records_) ++counts[r.split];
  EXPECT_EQ(counts[Split::kTrain], 300u);
  EXPECT_EQ(counts[Split::kValidation], 50u);
  EXPECT_EQ(counts[Split::kTest], 50u);
}

TEST_F(GenerateTest, EverySplitCoversEverySetAndSfc) {
  for (Split split : {Split::kTrain, Split::kValidation, Split::kTest}) {
    std::set<MetricSet> sets;
    std::set<SfcType> sfcs;
    for (const auto& r : *records_) {
      if (r.split != split) continue;
      sets.insert(r.metrics);
      if (r.sfc_type) sfcs.insert(*r.sfc_type);
    }
    EXPECT_EQ(sets.size(), 25u) << SplitName(split);
    EXPECT_EQ(sfcs.size(), 6u) << SplitName(split);
  }
}

TEST_F(GenerateTest, SetsAreBalanced) {
  std::map<MetricSet, size_t> per_set;
  for (const auto& r : *records_) ++per_set[r.metrics];
  size_t lo = SIZE_MAX, hi = 0;
  for (const auto& [set, n] : per_set) {
    lo = std::min(lo, n);
    hi = std::max(hi, n);
  }
  EXPECT_LE(hi - lo, 1u);
}

TEST_F(GenerateTest, RecordsAreConsistent) {
  std::set<std::string> questions;
  for (const auto& r : *records_) {
    EXPECT_TRUE(questions.insert(r.question).second) << r.question;
    EXPECT_EQ(r.sql, sql::Render(SqlFor(r.metrics, r.sfc_type, r.dc_id)));
    const bool latency = std::any_of(r.metrics.begin(), r.metrics.end(), IsLatencyMetric);
    EXPECT_EQ(r.sfc_type.has_value(), latency);
    if (r.sfc_type) {
      EXPECT_NE(r.question.find(SfcName(*r.sfc_type)), std::string::npos);
    }
    if (r.dc_id) {
      EXPECT_NE(r.question.find(std::to_string(*r.dc_id)), std::string::npos);
    }
    ASSERT_GE(r.step, 0);
    ASSERT_LT(static_cast<size_t>(r.step), traj_->size());
    EXPECT_EQ(r.answer, DirectAnswer(r, (*traj_)[r.step])) << r.question;
    auto pruned = Prune(r.question);
    EXPECT_EQ(r.schema_context, pruned.ddl);
  }
}

TEST_F(GenerateTest, SeedControlsOutput) {
  GenerateOptions opts;
  opts.target_size = 400;
  opts.seed = 3;
  EXPECT_EQ(Generate(*traj_, opts), *records_);
  opts.seed = 4;
  EXPECT_NE(Generate(*traj_, opts), *records_);
}

TEST_F(GenerateTest, CorpusJsonlRoundTrip) {
  auto path = std::filesystem::temp_directory_path() / "netstate_corpus_test.jsonl";
  WriteCorpus(path, *records_);
  EXPECT_EQ(ReadCorpus(path), *records_);
  {
    std::ofstream out(path, std::ios::app);
    out << "\n" << RecordToJsonLine(records_->front()) << "\n";
  }
  EXPECT_THROW(ReadCorpus(path), ConfigError);
  std::filesystem::remove(path);
  EXPECT_THROW(RecordFromJsonLine("{\"question\": 1}"), ConfigError);
  EXPECT_THROW(RecordFromJsonLine("not json"), ConfigError);
}

TEST(GenerateErrorsTest, InfeasibleRequests) {
  auto traj = Trajectory(3);
  GenerateOptions opts;
  opts.target_size = 192;  // 24 validation records cannot cover 25 metric sets
  EXPECT_THROW(Generate(traj, opts), DatasetError);
  opts.target_size = 100;
  EXPECT_THROW(Generate(traj, opts), DatasetError);
  EXPECT_THROW(Generate({}, GenerateOptions{}), DatasetError);
}

}  // namespace
}  // namespace netstate
