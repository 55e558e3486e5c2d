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


#include "netstate/baseline.h"

#include <algorithm>
#include <regex>
#include <set>

#include "netstate/pruner.h"

namespace netstate {
namespace {

bool AnyWord(const std::vector<std::string>& words, std::initializer_list<std::string_view> patterns) {
  for (auto p : patterns) {
    if (MatchesPattern(words, p)) return true;
  }
  return false;
}

}  // namespace

Translation Translate(std::string_view question) {
  const std::vector<std::string> words = WordTokens(question);
  Translation t;

  if (AnyWord(words, {"idle"})) t.metrics.push_back(MetricKind::kIdleVnfCount);
  if (AnyWord(words, {"latency", "latencies", "delay*", "e2e", "end to end"})) {
    bool min = AnyWord(words, {"minimum", "min", "lowest", "smallest", "shortest"});
    bool max = AnyWord(words, {"maximum", "max", "highest", "largest", "longest", "worst", "peak"});
    if (!min && !max) {
      throw TranslateError(TranslateError::Kind::kCannotTranslate,
                           "latency asked without minimum or maximum");
    }
    if (min) t.metrics.push_back(MetricKind::kMinE2eLatency);
    if (max) t.metrics.push_back(MetricKind::kMaxE2eLatency);
  }
  if (AnyWord(words, {"storage"})) t.metrics.push_back(MetricKind::kAvailableStorage);
  if (AnyWord(words, {"cpu*", "computational", "compute"})) {
    t.metrics.push_back(MetricKind::kAvailableCpu);
  }
  if (t.metrics.empty()) {
    throw TranslateError(TranslateError::Kind::kCannotTranslate, "no known metric in question");
  }
  if (t.metrics.size() > 3) {
    throw TranslateError(TranslateError::Kind::kAmbiguous, "more than three metrics requested");
  }

  std::set<SfcType> sfcs;
  static constexpr std::pair<std::string_view, SfcType> kSfcWords[] = {
      {"cg", SfcType::kCg},     {"ar", SfcType::kAr},       {"voip", SfcType::kVoip},
      {"vs", SfcType::kVs},     {"miot", SfcType::kMiot},   {"ind4", SfcType::kInd40},
      {"ind 4", SfcType::kInd40}};
  for (const auto& [word, type] : kSfcWords) {
    if (MatchesPattern(words, word)) sfcs.insert(type);
  }
  if (sfcs.size() > 1) {
    throw TranslateError(TranslateError::Kind::kAmbiguous, "more than one SFC type named");
  }
  if (!sfcs.empty()) t.sfc_type = *sfcs.begin();
  if (!t.sfc_type && std::any_of(t.metrics.begin(), t.metrics.end(), IsLatencyMetric)) {
    throw TranslateError(TranslateError::Kind::kCannotTranslate, "latency needs an SFC type");
  }

  static const std::regex kDc(R"((data\s*center|datacenter|dc)\s*#?\s*(\d+))", std::regex::icase);
  std::set<int> dcs;
  const std::string text(question);
  for (auto it = std::sregex_iterator(text.begin(), text.end(), kDc); it != std::sregex_iterator();
       ++it) {
    try {
      dcs.insert(std::stoi((*it)[2].str()));
    } catch (const std::out_of_range&) {
      throw TranslateError(TranslateError::Kind::kCannotTranslate, "data center id out of range");
    }
  }
  if (dcs.size() > 1) {
    throw TranslateError(TranslateError::Kind::kAmbiguous, "more than one data center named");
  }
  if (!dcs.empty()) t.dc_id = *dcs.begin();

  t.stmt = SqlFor(t.metrics, t.sfc_type, t.dc_id);
  return t;
}

std::string Answer(std::string_view question, const RelationalStore& store) {
  return sql::RenderAnswer(sql::Execute(Translate(question).stmt, store));
}

}  // namespace netstate
