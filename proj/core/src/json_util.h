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


// JSON helpers shared by the core sources. Not installed.

#ifndef NETSTATE_SRC_JSON_UTIL_H_
#define NETSTATE_SRC_JSON_UTIL_H_

#include <nlohmann/json.hpp>

#include <string>

#include "netstate/error.h"
#include "netstate/value.h"

namespace netstate::internal {

using Json = nlohmann::json;

// Integers are written as JSON integers. Other decimals go through a
// double; with at most six fractional digits the shortest round-trip form
// nlohmann emits is the exact decimal text.
inline Json DecimalToJson(Decimal d) {
  if (d.IsInteger()) return d.micros() / Decimal::kUnit;
  return static_cast<double>(d.micros()) / static_cast<double>(Decimal::kUnit);
}

inline Decimal DecimalFromJson(const Json& j, const char* what) {
  std::string text;
  if (j.is_number()) {
    text = j.dump();
  } else if (j.is_string()) {
    text = j.get<std::string>();
  } else {
    throw ConfigError(std::string("expected a number for ") + what);
  }
  auto d = Decimal::Parse(text);
  if (!d) throw ConfigError(std::string("bad decimal for ") + what + ": " + text);
  return *d;
}

template <typename T>
T Field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ConfigError(std::string("missing field '") + key + "'");
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(std::string("bad type for field '") + key + "'");
  }
}

}  // namespace netstate::internal

#endif  // NETSTATE_SRC_JSON_UTIL_H_
