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
#include <fstream>
#include <map>
#include <numeric>
#include <unordered_set>

#include "json_util.h"
#include "netstate/dataset.h"
#include "netstate/random.h"
#include "netstate/store.h"

namespace netstate {
namespace {

using internal::Json;

// One sampled question before it is materialised.
struct Draft {
  size_t set_index;
  size_t paraphrase;
  std::optional<SfcType> sfc;
  std::optional<int> dc;
  int64_t step_index;
};

// Floyd's algorithm: n distinct values from [0, k), returned sorted.
std::vector<uint64_t> SampleDistinct(Rng& rng, uint64_t k, uint64_t n) {
  std::unordered_set<uint64_t> chosen;
  chosen.reserve(n * 2);
  for (uint64_t j = k - n; j < k; ++j) {
    uint64_t t = static_cast<uint64_t>(UniformInt(rng, 0, static_cast<int64_t>(j)));
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<uint64_t> out(chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

template <typename T>
void Shuffle(Rng& rng, std::vector<T>& v) {
  for (size_t i = v.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(UniformInt(rng, 0, static_cast<int64_t>(i - 1)));
    std::swap(v[i - 1], v[j]);
  }
}

// Equal shares, except that a set never gets more than its capacity; the
// surplus goes to the others. Remainders go to the earliest sets.
std::vector<size_t> WaterFill(size_t total, std::span<const uint64_t> capacity) {
  std::vector<size_t> out(capacity.size(), 0);
  std::vector<size_t> open(capacity.size());
  std::iota(open.begin(), open.end(), 0);
  size_t remaining = total;
  while (!open.empty()) {
    size_t share = remaining / open.size();
    size_t extra = remaining % open.size();
    std::vector<size_t> still_open;
    bool capped = false;
    for (size_t i = 0; i < open.size(); ++i) {
      size_t want = share + (i < extra ? 1 : 0);
      if (capacity[open[i]] < want) {
        out[open[i]] = capacity[open[i]];
        remaining -= capacity[open[i]];
        capped = true;
      } else {
        still_open.push_back(open[i]);
      }
    }
    if (!capped) {
      for (size_t i = 0; i < open.size(); ++i) out[open[i]] = share + (i < extra ? 1 : 0);
      return out;
    }
    open = std::move(still_open);
  }
  if (remaining != 0) {
    throw DatasetError("templates cannot produce " + std::to_string(total) +
                       " distinct questions");
  }
  return out;
}

// Largest-remainder apportionment of `total` over `weights`, at least one each.
std::vector<size_t> Apportion(size_t total, std::span<const size_t> weights) {
  const size_t n = weights.size();
  if (total < n) {
    throw DatasetError("split of " + std::to_string(total) + " records cannot cover " +
                       std::to_string(n) + " metric sets");
  }
  const size_t spare = total - n;
  const size_t weight_sum = std::accumulate(weights.begin(), weights.end(), size_t{0});
  std::vector<size_t> out(n, 1);
  std::vector<std::pair<size_t, size_t>> remainders;  // (remainder, index)
  size_t given = 0;
  for (size_t i = 0; i < n; ++i) {
    size_t num = spare * weights[i];
    out[i] += num / weight_sum;
    given += num / weight_sum;
    remainders.emplace_back(num % weight_sum, i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (size_t i = 0; given < spare; ++i, ++given) ++out[remainders[i].second];
  return out;
}

Json OptionalJson(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

std::string_view SplitName(Split split) {
  switch (split) {
    case Split::kTrain: return "train";
    case Split::kValidation: return "validation";
    case Split::kTest: return "test";
  }
  return "?";
}

Split ParseSplit(std::string_view text) {
  for (Split s : {Split::kTrain, Split::kValidation, Split::kTest}) {
    if (SplitName(s) == text) return s;
  }
  throw UnknownNameError("split", std::string(text));
}

SplitSizes ComputeSplitSizes(size_t target_size) {
  if (target_size < 8 || target_size % 8 != 0) {
    throw DatasetError("dataset size must be a positive multiple of 8, got " +
                       std::to_string(target_size));
  }
  const size_t eighth = target_size / 8;
  return {target_size - 2 * eighth, eighth, eighth};
}

std::vector<QueryRecord> Generate(std::span<const NetworkState> trajectory,
                                  const GenerateOptions& options) {
  if (trajectory.empty()) throw DatasetError("empty trajectory");
  const TemplateBank& bank = options.templates ? *options.templates : TemplateBank::Default();
  const KeywordMap& keywords = options.keywords ? *options.keywords : KeywordMap::Default();
  const SplitSizes sizes = ComputeSplitSizes(options.target_size);

  std::vector<int> dc_ids;
  for (const auto& dc : trajectory.front().data_centers) dc_ids.push_back(dc.spec.dc_id);
  std::sort(dc_ids.begin(), dc_ids.end());
  if (dc_ids.empty()) throw DatasetError("trajectory has no data centers");

  const std::vector<MetricSet> sets = AllMetricSets();
  std::vector<uint64_t> per_sfc_keys(sets.size());
  std::vector<size_t> sfc_variants(sets.size());
  std::vector<uint64_t> capacity(sets.size());
  for (size_t s = 0; s < sets.size(); ++s) {
    per_sfc_keys[s] = bank.ParaphraseCount(sets[s], false) +
                      dc_ids.size() * bank.ParaphraseCount(sets[s], true);
    sfc_variants[s] =
        std::any_of(sets[s].begin(), sets[s].end(), IsLatencyMetric) ? kAllSfcTypes.size() : 1;
    capacity[s] = per_sfc_keys[s] * sfc_variants[s];
  }
  const std::vector<size_t> per_set = WaterFill(options.target_size, capacity);

  Rng rng(options.seed);
  const int64_t last_step = static_cast<int64_t>(trajectory.size()) - 1;

  // Sample keys per (set, SFC).
  std::vector<std::vector<Draft>> drafts(sets.size());
  for (size_t s = 0; s < sets.size(); ++s) {
    const size_t variants = sfc_variants[s];
    const uint64_t all_count = bank.ParaphraseCount(sets[s], false);
    const uint64_t dc_count = bank.ParaphraseCount(sets[s], true);
    for (size_t v = 0; v < variants; ++v) {
      const size_t n = per_set[s] / variants + (v < per_set[s] % variants ? 1 : 0);
      std::optional<SfcType> sfc;
      if (variants > 1) sfc = kAllSfcTypes[v];
      for (uint64_t key : SampleDistinct(rng, per_sfc_keys[s], n)) {
        Draft d{s, 0, sfc, std::nullopt, 0};
        if (key < all_count) {
          d.paraphrase = key;
        } else {
          key -= all_count;
          d.dc = dc_ids[key / dc_count];
          d.paraphrase = key % dc_count;
        }
        d.step_index = UniformInt(rng, 0, last_step);
        drafts[s].push_back(d);
      }
    }
  }

  // Per-set split quotas. Validation and test share one apportionment.
  std::vector<size_t> weights(per_set.begin(), per_set.end());
  const std::vector<size_t> held_out = Apportion(sizes.validation, weights);
  if (sizes.validation != sizes.test) throw DatasetError("validation and test sizes differ");

  std::vector<std::vector<Split>> split_of(sets.size());
  size_t latency_rank = 0;
  for (size_t s = 0; s < sets.size(); ++s) {
    auto& ds = drafts[s];
    if (ds.size() < 2 * held_out[s] + 1) {
      throw DatasetError("metric set " + std::to_string(s) + " has too few records to split");
    }
    std::vector<size_t> order(ds.size());
    std::iota(order.begin(), order.end(), 0);
    Shuffle(rng, order);
    if (sfc_variants[s] > 1) {
      // Rotate SFC types through the held-out heads so every split sees each.
      const size_t n_sfc = kAllSfcTypes.size();
      auto bring = [&](size_t pos, SfcType want) {
        for (size_t i = pos; i < order.size(); ++i) {
          if (ds[order[i]].sfc == want) {
            std::swap(order[pos], order[i]);
            return;
          }
        }
      };
      bring(0, kAllSfcTypes[latency_rank % n_sfc]);
      bring(held_out[s], kAllSfcTypes[(latency_rank + 3) % n_sfc]);
      ++latency_rank;
    }
    split_of[s].assign(ds.size(), Split::kTrain);
    for (size_t i = 0; i < held_out[s]; ++i) split_of[s][order[i]] = Split::kValidation;
    for (size_t i = held_out[s]; i < 2 * held_out[s]; ++i) split_of[s][order[i]] = Split::kTest;
  }

  std::vector<std::optional<RelationalStore>> stores(trajectory.size());
  std::unordered_set<std::string> seen;
  std::vector<QueryRecord> records;
  records.reserve(options.target_size);
  for (size_t s = 0; s < sets.size(); ++s) {
    std::vector<size_t> order(drafts[s].size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      const Draft& x = drafts[s][a];
      const Draft& y = drafts[s][b];
      return std::tie(x.paraphrase, x.sfc, x.dc, x.step_index) <
             std::tie(y.paraphrase, y.sfc, y.dc, y.step_index);
    });
    for (size_t i : order) {
      const Draft& d = drafts[s][i];
      auto& store = stores[d.step_index];
      if (!store) store = RelationalStore::Ingest(trajectory[d.step_index]);

      QueryRecord r;
      r.metrics = sets[s];
      r.sfc_type = d.sfc;
      r.dc_id = d.dc;
      r.split = split_of[s][i];
      r.step = store->time_step();
      r.question = bank.Phrase(r.metrics, d.sfc, d.dc, d.paraphrase);
      if (!seen.insert(r.question).second) {
        throw DatasetError("duplicate question generated: " + r.question);
      }
      const sql::SelectStatement stmt = SqlFor(r.metrics, d.sfc, d.dc);
      PrunedSchema pruned = Prune(r.question, options.budget_tokens, keywords);
      for (const auto& t : sql::ReferencedTables(stmt)) {
        if (std::find(pruned.tables.begin(), pruned.tables.end(), t) == pruned.tables.end()) {
          throw DatasetError("pruned schema for '" + r.question + "' lacks table " + t);
        }
      }
      r.schema_context = std::move(pruned.ddl);
      r.sql = sql::Render(stmt);
      r.answer = sql::RenderAnswer(sql::Execute(stmt, *store));
      records.push_back(std::move(r));
    }
  }

  // Coverage: each split holds every metric set and every SFC type.
  for (Split split : {Split::kTrain, Split::kValidation, Split::kTest}) {
    std::vector<bool> set_seen(sets.size(), false);
    std::vector<bool> sfc_seen(kAllSfcTypes.size(), false);
    for (size_t s = 0; s < sets.size(); ++s) {
      for (size_t i = 0; i < drafts[s].size(); ++i) {
        if (split_of[s][i] != split) continue;
        set_seen[s] = true;
        if (drafts[s][i].sfc) sfc_seen[static_cast<size_t>(*drafts[s][i].sfc)] = true;
      }
    }
    if (std::find(set_seen.begin(), set_seen.end(), false) != set_seen.end() ||
        std::find(sfc_seen.begin(), sfc_seen.end(), false) != sfc_seen.end()) {
      throw DatasetError(std::string("split ") + std::string(SplitName(split)) +
                         " does not cover every metric set and SFC type");
    }
  }
  return records;
}

std::string RecordToJsonLine(const QueryRecord& record) {
  Json j;
  j["question"] = record.question;
  j["schema_context"] = record.schema_context;
  j["sql"] = record.sql;
  j["answer"] = record.answer;
  Json metrics = Json::array();
  for (MetricKind m : record.metrics) metrics.push_back(std::string(MetricName(m)));
  j["metrics"] = std::move(metrics);
  j["sfc_type"] = record.sfc_type ? Json(std::string(SfcName(*record.sfc_type))) : Json(nullptr);
  j["dc_id"] = OptionalJson(record.dc_id);
  j["split"] = std::string(SplitName(record.split));
  j["step"] = record.step;
  return j.dump();
}

QueryRecord RecordFromJsonLine(std::string_view line) {
  QueryRecord r;
  try {
    Json j = Json::parse(line);
    r.question = internal::Field<std::string>(j, "question");
    r.schema_context = internal::Field<std::string>(j, "schema_context");
    r.sql = internal::Field<std::string>(j, "sql");
    r.answer = internal::Field<std::string>(j, "answer");
    for (const auto& m : internal::Field<std::vector<std::string>>(j, "metrics")) {
      r.metrics.push_back(ParseMetric(m));
    }
    if (auto it = j.find("sfc_type"); it != j.end() && !it->is_null()) {
      r.sfc_type = ParseSfcType(it->get<std::string>());
    }
    if (auto it = j.find("dc_id"); it != j.end() && !it->is_null()) r.dc_id = it->get<int>();
    r.split = ParseSplit(internal::Field<std::string>(j, "split"));
    r.step = internal::Field<int64_t>(j, "step");
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("malformed corpus line: ") + e.what());
  } catch (const UnknownNameError& e) {
    throw ConfigError(std::string("malformed corpus line: ") + e.what());
  }
  return r;
}

void WriteCorpus(const std::filesystem::path& path, std::span<const QueryRecord> records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  for (const auto& r : records) out << RecordToJsonLine(r) << '\n';
  if (!out) throw Error("failed writing " + path.string());
}

std::vector<QueryRecord> ReadCorpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<QueryRecord> records;
  std::string line;
  size_t blank = 0;
  while (std::getline(in, line)) {
    if (line.empty()) {
      ++blank;
      continue;
    }
    // Ids are line numbers, so a gap would shift every later id.
    if (blank) throw ConfigError(path.string() + ": blank line inside corpus");
    records.push_back(RecordFromJsonLine(line));
  }
  return records;
}

}  // namespace netstate
