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


#ifndef NETSTATE_BASELINE_H_
#define NETSTATE_BASELINE_H_

#include <optional>
#include <string>
#include <string_view>

#include "netstate/dataset.h"
#include "netstate/error.h"
#include "netstate/sql.h"
#include "netstate/store.h"

namespace netstate {

class TranslateError : public Error {
 public:
  enum class Kind { kCannotTranslate, kAmbiguous };
  TranslateError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct Translation {
  MetricSet metrics;
  std::optional<SfcType> sfc_type;
  std::optional<int> dc_id;
  sql::SelectStatement stmt;
};

// Rule-based translator: spots metric keywords, an SFC name and a DC
// number, then emits the same query the dataset generator would.
Translation Translate(std::string_view question);

// Translate, execute and render the answer.
std::string Answer(std::string_view question, const RelationalStore& store);

}  // namespace netstate

#endif  // NETSTATE_BASELINE_H_
