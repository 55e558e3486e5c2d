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


#include "netstate/pruner.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "embedded_data.h"
#include "json_util.h"
#include "netstate/store.h"

namespace netstate {
namespace {

bool IsWordByte(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '\'' || c == '"' || c >= 0x80;
}

bool IsFoldingPunct(char c) {
  return c == ',' || c == ';' || c == '.' || c == ':' || c == '?' || c == '!';
}

bool IsCanonicalTable(const std::string& name) {
  for (const auto& t : CanonicalSchema()) {
    if (t.name == name) return true;
  }
  return false;
}

}  // namespace

size_t CountTokens(std::string_view text) {
  size_t count = 0;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    bool chunk_has_token = false;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      unsigned char c = static_cast<unsigned char>(text[i]);
      if (IsWordByte(c)) {
        while (i < text.size() && IsWordByte(static_cast<unsigned char>(text[i]))) ++i;
        ++count;
        chunk_has_token = true;
      } else if (IsFoldingPunct(static_cast<char>(c)) && chunk_has_token) {
        ++i;
      } else {
        ++i;
        ++count;
        chunk_has_token = true;
      }
    }
  }
  return count;
}

std::vector<std::string> WordTokens(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  for (char ch : text) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (c < 0x80 && std::isalnum(c)) {
      current += static_cast<char>(std::tolower(c));
    } else if (!current.empty()) {
      words.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

bool MatchesPattern(std::span<const std::string> words, std::string_view pattern) {
  std::vector<std::string> parts;
  std::istringstream in{std::string(pattern)};
  for (std::string p; in >> p;) parts.push_back(std::move(p));
  if (parts.empty() || parts.size() > words.size()) return false;
  auto word_matches = [](const std::string& word, const std::string& part) {
    if (!part.empty() && part.back() == '*') {
      return word.starts_with(std::string_view(part).substr(0, part.size() - 1));
    }
    return word == part;
  };
  for (size_t start = 0; start + parts.size() <= words.size(); ++start) {
    bool all = true;
    for (size_t k = 0; k < parts.size() && all; ++k) all = word_matches(words[start + k], parts[k]);
    if (all) return true;
  }
  return false;
}

const KeywordMap& KeywordMap::Default() {
  static const KeywordMap map = FromJson(internal::kDefaultKeywordsJson);
  return map;
}

KeywordMap KeywordMap::FromJson(std::string_view text) {
  using internal::Json;
  KeywordMap map;
  try {
    Json j = Json::parse(text);
    for (const auto& r : j.at("rules")) {
      KeywordRule rule;
      rule.patterns = r.at("keywords").get<std::vector<std::string>>();
      rule.tables = r.at("tables").get<std::vector<std::string>>();
      rule.required = r.value("required", true);
      for (auto& p : rule.patterns) {
        std::transform(p.begin(), p.end(), p.begin(),
                       [](unsigned char c) { return std::tolower(c); });
      }
      for (const auto& t : rule.tables) {
        if (!IsCanonicalTable(t)) throw ConfigError("keyword rule maps to unknown table " + t);
      }
      map.rules_.push_back(std::move(rule));
    }
    if (j.contains("trim_order")) {
      map.trim_order_ = j["trim_order"].get<std::vector<std::string>>();
    }
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("invalid keyword rules: ") + e.what());
  }
  for (const auto& t : map.trim_order_) {
    if (!IsCanonicalTable(t)) throw ConfigError("trim_order names unknown table " + t);
  }
  // Tables missing from trim_order are trimmed last, in reverse schema order.
  auto schema = CanonicalSchema();
  for (auto it = schema.rbegin(); it != schema.rend(); ++it) {
    if (std::find(map.trim_order_.begin(), map.trim_order_.end(), it->name) ==
        map.trim_order_.end()) {
      map.trim_order_.push_back(it->name);
    }
  }
  return map;
}

KeywordMap KeywordMap::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open keyword rules " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return FromJson(buf.str());
}

KeywordMap::Match KeywordMap::MatchQuestion(std::string_view question) const {
  auto words = WordTokens(question);
  std::vector<std::string> hit, required;
  for (const auto& rule : rules_) {
    bool matched = std::any_of(rule.patterns.begin(), rule.patterns.end(),
                               [&](const std::string& p) { return MatchesPattern(words, p); });
    if (!matched) continue;
    for (const auto& t : rule.tables) {
      hit.push_back(t);
      if (rule.required) required.push_back(t);
    }
  }
  Match match;
  for (const auto& t : CanonicalSchema()) {
    if (std::find(hit.begin(), hit.end(), t.name) != hit.end()) match.tables.push_back(t.name);
    if (std::find(required.begin(), required.end(), t.name) != required.end()) {
      match.required.push_back(t.name);
    }
  }
  return match;
}

PrunedSchema Prune(std::string_view question, size_t budget_tokens, const KeywordMap& keywords) {
  auto match = keywords.MatchQuestion(question);
  PrunedSchema out;
  std::vector<std::string> required = match.required;
  if (match.tables.empty()) {
    out.full_schema_fallback = true;
    for (const auto& t : CanonicalSchema()) out.tables.push_back(t.name);
  } else {
    out.tables = match.tables;
  }

  auto render = [&] {
    out.ddl.clear();
    for (const auto& t : out.tables) {
      if (!out.ddl.empty()) out.ddl += '\n';
      out.ddl += CanonicalTable(t).Ddl();
    }
    out.token_count = CountTokens(std::string(question) + "\n" + out.ddl);
  };
  render();
  for (const auto& victim : keywords.trim_order()) {
    if (out.token_count <= budget_tokens) break;
    if (std::find(required.begin(), required.end(), victim) != required.end()) continue;
    auto it = std::find(out.tables.begin(), out.tables.end(), victim);
    if (it == out.tables.end() || out.tables.size() == 1) continue;
    out.tables.erase(it);
    render();
  }
  if (out.token_count > budget_tokens) {
    throw PruneError("schema for the question needs " + std::to_string(out.token_count) +
                     " tokens, budget is " + std::to_string(budget_tokens));
  }
  return out;
}

}  // namespace netstate
