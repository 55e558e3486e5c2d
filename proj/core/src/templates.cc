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
#include <sstream>
#include <stdexcept>

#include "embedded_data.h"
#include "json_util.h"
#include "netstate/dataset.h"

namespace netstate {
namespace {

void ReplaceAll(std::string& s, std::string_view from, std::string_view to) {
  for (size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
}

sql::Predicate Eq(std::string column, sql::Literal literal) {
  return {std::move(column), sql::CompareOp::kEq, std::move(literal)};
}

sql::SelectStatement SingleMetric(MetricKind metric, std::optional<SfcType> sfc,
                                  std::optional<int> dc) {
  using sql::AggregateCall;
  using sql::Aggregate;
  sql::SelectStatement s;
  auto dc_filter = [&] {
    if (dc) s.where.push_back(Eq("dc_id", Decimal::FromInt(*dc)));
  };
  switch (metric) {
    case MetricKind::kIdleVnfCount:
      s.projections.push_back({AggregateCall{Aggregate::kCount, std::nullopt}, std::nullopt});
      s.from_table = "vnf_instances";
      s.where.push_back(Eq("status", std::string("idle")));
      dc_filter();
      break;
    case MetricKind::kMinE2eLatency:
    case MetricKind::kMaxE2eLatency:
      if (!sfc) {
        throw DatasetError(std::string(MetricName(metric)) + " needs an SFC type");
      }
      s.projections.push_back(
          {AggregateCall{metric == MetricKind::kMinE2eLatency ? Aggregate::kMin : Aggregate::kMax,
                         "e2e_latency_ms"},
           std::nullopt});
      s.from_table = "sfc_requests";
      s.where.push_back(Eq("sfc_type", std::string(SfcName(*sfc))));
      dc_filter();
      break;
    case MetricKind::kAvailableStorage:
    case MetricKind::kAvailableCpu: {
      std::string column = metric == MetricKind::kAvailableStorage ? "available_storage_gb"
                                                                   : "available_cpu_units";
      // One DC reads its row; no DC sums over all of them.
      if (dc) {
        s.projections.push_back({sql::ColumnRef{column}, std::nullopt});
      } else {
        s.projections.push_back({AggregateCall{Aggregate::kSum, column}, std::nullopt});
      }
      s.from_table = "data_centers";
      dc_filter();
      break;
    }
  }
  return s;
}

std::vector<std::string> Strings(const internal::Json& j, const char* what) {
  if (!j.is_array()) throw ConfigError(std::string("template file: ") + what + " must be a list");
  return j.get<std::vector<std::string>>();
}

}  // namespace

std::string_view MetricName(MetricKind metric) {
  switch (metric) {
    case MetricKind::kIdleVnfCount: return "IdleVnfCount";
    case MetricKind::kMinE2eLatency: return "MinE2eLatency";
    case MetricKind::kMaxE2eLatency: return "MaxE2eLatency";
    case MetricKind::kAvailableStorage: return "AvailableStorage";
    case MetricKind::kAvailableCpu: return "AvailableCpu";
  }
  return "?";
}

MetricKind ParseMetric(std::string_view text) {
  for (MetricKind m : kAllMetrics) {
    if (MetricName(m) == text) return m;
  }
  throw UnknownNameError("metric", std::string(text));
}

std::string_view MetricLabel(MetricKind metric) {
  switch (metric) {
    case MetricKind::kIdleVnfCount: return "idle_vnf_count";
    case MetricKind::kMinE2eLatency: return "min_e2e_latency_ms";
    case MetricKind::kMaxE2eLatency: return "max_e2e_latency_ms";
    case MetricKind::kAvailableStorage: return "available_storage_gb";
    case MetricKind::kAvailableCpu: return "available_cpu_units";
  }
  return "?";
}

bool IsLatencyMetric(MetricKind metric) {
  return metric == MetricKind::kMinE2eLatency || metric == MetricKind::kMaxE2eLatency;
}

std::vector<MetricSet> AllMetricSets() {
  std::vector<MetricSet> sets;
  const size_t n = kAllMetrics.size();
  for (size_t i = 0; i < n; ++i) sets.push_back({kAllMetrics[i]});
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) sets.push_back({kAllMetrics[i], kAllMetrics[j]});
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      for (size_t k = j + 1; k < n; ++k) {
        sets.push_back({kAllMetrics[i], kAllMetrics[j], kAllMetrics[k]});
      }
    }
  }
  return sets;
}

sql::SelectStatement SqlFor(std::span<const MetricKind> metrics, std::optional<SfcType> sfc_type,
                            std::optional<int> dc_id) {
  MetricSet sorted(metrics.begin(), metrics.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty() || sorted.size() > 3 ||
      std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DatasetError("a query covers one to three distinct metrics");
  }
  if (sorted.size() == 1) return SingleMetric(sorted.front(), sfc_type, dc_id);

  sql::SelectStatement combined;
  for (MetricKind m : sorted) {
    combined.projections.push_back(
        {sql::Subquery(SingleMetric(m, sfc_type, dc_id)), std::string(MetricLabel(m))});
  }
  return combined;
}

const TemplateBank& TemplateBank::Default() {
  static const TemplateBank bank = FromJson(internal::kDefaultTemplatesJson);
  return bank;
}

TemplateBank TemplateBank::FromJson(std::string_view text) {
  using internal::Json;
  TemplateBank bank;
  try {
    Json j = Json::parse(text);
    bank.lead_ins_ = Strings(j.at("lead_ins"), "lead_ins");
    bank.loc_dc_ = Strings(j.at("locations").at("dc"), "locations.dc");
    bank.loc_all_ = Strings(j.at("locations").at("all"), "locations.all");
    for (MetricKind m : kAllMetrics) {
      auto& pm = bank.metrics_[static_cast<size_t>(m)];
      std::string name(MetricName(m));
      pm.phrases = Strings(j.at("metric_phrases").at(name), "metric_phrases");
      if (j.contains("single") && j["single"].contains(name)) {
        const Json& single = j["single"][name];
        if (single.contains("dc")) pm.single_dc = Strings(single["dc"], "single.dc");
        if (single.contains("all")) pm.single_all = Strings(single["all"], "single.all");
      }
    }
    for (size_t k = 0; k < 3; ++k) {
      bank.frames_[k] = Strings(j.at("frames").at(std::to_string(k + 1)), "frames");
    }
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("invalid template file: ") + e.what());
  }

  auto require = [](bool ok, const std::string& msg) {
    if (!ok) throw ConfigError("invalid template file: " + msg);
  };
  require(!bank.lead_ins_.empty(), "lead_ins is empty");
  require(!bank.loc_dc_.empty() && !bank.loc_all_.empty(), "locations need dc and all entries");
  for (const auto& l : bank.loc_dc_) require(l.find("{dc}") != std::string::npos, "dc location without {dc}");
  for (const auto& l : bank.loc_all_) require(l.find("{dc}") == std::string::npos, "all location with {dc}");
  for (MetricKind m : kAllMetrics) {
    const auto& pm = bank.metrics_[static_cast<size_t>(m)];
    std::string name(MetricName(m));
    require(!pm.phrases.empty(), name + " has no phrases");
    for (const auto& p : pm.phrases) {
      require((p.find("{sfc}") != std::string::npos) == IsLatencyMetric(m),
              name + " phrase '" + p + "' has a misplaced {sfc}");
    }
    for (const auto& t : pm.single_dc) require(t.find("{dc}") != std::string::npos, name + " single dc template without {dc}");
    for (const auto& t : pm.single_all) require(t.find("{dc}") == std::string::npos, name + " single all template with {dc}");
  }
  for (size_t k = 0; k < 3; ++k) {
    require(!bank.frames_[k].empty(), "no frames for " + std::to_string(k + 1) + " metrics");
    for (const auto& f : bank.frames_[k]) {
      require(f.find("{loc}") != std::string::npos, "frame '" + f + "' lacks {loc}");
      for (size_t i = 1; i <= k + 1; ++i) {
        require(f.find("{m" + std::to_string(i) + "}") != std::string::npos,
                "frame '" + f + "' lacks {m" + std::to_string(i) + "}");
      }
    }
  }
  for (const auto& set : AllMetricSets()) {
    for (bool has_dc : {false, true}) {
      require(bank.ParaphraseCount(set, has_dc) >= 4, "fewer than 4 paraphrases for a metric set");
    }
  }
  return bank;
}

TemplateBank TemplateBank::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open template file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return FromJson(buf.str());
}

size_t TemplateBank::ParaphraseCount(std::span<const MetricKind> metrics, bool has_dc) const {
  if (metrics.empty() || metrics.size() > 3) return 0;
  size_t hand = 0;
  if (metrics.size() == 1) {
    const auto& pm = metrics_[static_cast<size_t>(metrics.front())];
    hand = has_dc ? pm.single_dc.size() : pm.single_all.size();
  }
  size_t composed = frames_[metrics.size() - 1].size() * (has_dc ? loc_dc_.size() : loc_all_.size());
  for (MetricKind m : metrics) composed *= metrics_[static_cast<size_t>(m)].phrases.size();
  return (hand + composed) * lead_ins_.size();
}

std::string TemplateBank::Phrase(std::span<const MetricKind> metrics,
                                 std::optional<SfcType> sfc_type, std::optional<int> dc_id,
                                 size_t paraphrase_index) const {
  MetricSet sorted(metrics.begin(), metrics.end());
  std::sort(sorted.begin(), sorted.end());
  const bool has_dc = dc_id.has_value();
  const size_t total = ParaphraseCount(sorted, has_dc);
  if (paraphrase_index >= total) {
    throw std::out_of_range("paraphrase index " + std::to_string(paraphrase_index) +
                            " out of range (" + std::to_string(total) + " paraphrases)");
  }
  if (!sfc_type && std::any_of(sorted.begin(), sorted.end(), IsLatencyMetric)) {
    throw DatasetError("latency questions need an SFC type");
  }

  const size_t per_lead = total / lead_ins_.size();
  const std::string& lead = lead_ins_[paraphrase_index / per_lead];
  size_t r = paraphrase_index % per_lead;

  std::string text;
  const std::vector<std::string>* hand = nullptr;
  if (sorted.size() == 1) {
    const auto& pm = metrics_[static_cast<size_t>(sorted.front())];
    hand = has_dc ? &pm.single_dc : &pm.single_all;
  }
  if (hand && r < hand->size()) {
    text = (*hand)[r];
  } else {
    if (hand) r -= hand->size();
    const auto& frames = frames_[sorted.size() - 1];
    text = frames[r % frames.size()];
    r /= frames.size();
    for (size_t i = 0; i < sorted.size(); ++i) {
      const auto& phrases = metrics_[static_cast<size_t>(sorted[i])].phrases;
      ReplaceAll(text, "{m" + std::to_string(i + 1) + "}", phrases[r % phrases.size()]);
      r /= phrases.size();
    }
    const auto& locs = has_dc ? loc_dc_ : loc_all_;
    ReplaceAll(text, "{loc}", locs[r]);
  }
  if (sfc_type) ReplaceAll(text, "{sfc}", SfcName(*sfc_type));
  if (dc_id) ReplaceAll(text, "{dc}", std::to_string(*dc_id));

  if (!lead.empty()) {
    if (text.size() > 1 && std::isupper(static_cast<unsigned char>(text[0])) &&
        std::islower(static_cast<unsigned char>(text[1]))) {
      text[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(text[0])));
    }
    text = lead + text;
  }
  return text;
}

}  // namespace netstate
