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


#ifndef NETSTATE_PRUNER_H_
#define NETSTATE_PRUNER_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netstate/error.h"

namespace netstate {

inline constexpr size_t kDefaultTokenBudget = 512;

// Model-agnostic token count. Text is split on whitespace; inside each
// chunk, runs of word characters (letters, digits, '_', quotes, non-ASCII
// bytes) form one token and every other punctuation mark is its own token,
// except that , ; . : ? ! attach to the token before them in the chunk.
// "SELECT COUNT(*) FROM t;" counts 7.
size_t CountTokens(std::string_view text);

// Lower-cased ASCII alphanumeric runs: "Ind4.0 at DC-2?" -> ind4 0 at dc 2.
std::vector<std::string> WordTokens(std::string_view text);

// True if `pattern` (space-separated words, optional trailing '*' per word
// for prefix match) occurs as consecutive words of `words`.
bool MatchesPattern(std::span<const std::string> words, std::string_view pattern);

struct KeywordRule {
  std::vector<std::string> patterns;
  std::vector<std::string> tables;
  bool required = true;
};

// Keyword-to-table mapping loaded from a rules file.
class KeywordMap {
 public:
  // The rules compiled in from core/data/schema_keywords.json.
  static const KeywordMap& Default();
  static KeywordMap FromJson(std::string_view text);
  static KeywordMap Load(const std::filesystem::path& path);

  const std::vector<KeywordRule>& rules() const { return rules_; }
  // Canonical table names, first trimmed first.
  const std::vector<std::string>& trim_order() const { return trim_order_; }

  struct Match {
    std::vector<std::string> tables;    // canonical order
    std::vector<std::string> required;  // subset of tables
  };
  Match MatchQuestion(std::string_view question) const;

 private:
  std::vector<KeywordRule> rules_;
  std::vector<std::string> trim_order_;
};

class PruneError : public Error {
 public:
  using Error::Error;
};

struct PrunedSchema {
  std::vector<std::string> tables;  // canonical order
  std::string ddl;                  // table DDL joined by newlines
  size_t token_count = 0;           // CountTokens(question + "\n" + ddl)
  bool full_schema_fallback = false;
};

// Selects the tables whose keywords occur in the question, or every table
// when none match, then drops optional tables in trim order until the
// question plus DDL fits the budget. Throws PruneError if the required
// tables alone do not fit.
PrunedSchema Prune(std::string_view question, size_t budget_tokens = kDefaultTokenBudget,
                   const KeywordMap& keywords = KeywordMap::Default());

}  // namespace netstate

#endif  // NETSTATE_PRUNER_H_
