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

#ifndef NETSTATE_VALUE_H_
#define NETSTATE_VALUE_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace netstate {

// Fixed-point decimal with six fractional digits. All resource amounts,
// latencies and bandwidths are held in this form so that comparisons and
// sums are exact and rendering is stable across platforms.
class Decimal {
 public:
  static constexpr int kScale = 6;
  static constexpr int64_t kUnit = 1'000'000;

  constexpr Decimal() = default;

  static constexpr Decimal FromMicros(int64_t micros) {
    Decimal d;
    d.micros_ = micros;
    return d;
  }
  static Decimal FromInt(int64_t value);

  // Accepts an optional leading '-', digits, and at most six fractional
  // digits. Returns nullopt on anything else, including overflow.
  static std::optional<Decimal> Parse(std::string_view text);

  int64_t micros() const { return micros_; }
  bool IsInteger() const { return micros_ % kUnit == 0; }

  // Shortest exact rendering: "10", "79.2", "0.064", "-3.5".
  std::string ToString() const;

  Decimal operator+(Decimal other) const;
  Decimal operator-(Decimal other) const;
  Decimal operator*(int64_t factor) const;
  Decimal& operator+=(Decimal other) { return *this = *this + other; }
  Decimal& operator-=(Decimal other) { return *this = *this - other; }

  // Division by a positive integer, rounded half away from zero.
  Decimal DivideRounded(int64_t divisor) const;

  friend constexpr auto operator<=>(Decimal, Decimal) = default;

 private:
  int64_t micros_ = 0;
};

enum class ColumnType { kInteger, kRational, kText };

std::string_view ColumnTypeName(ColumnType type);

// A table cell or query output. std::monostate is SQL NULL, which only
// appears in query results, never in stored rows.
using Value = std::variant<std::monostate, int64_t, Decimal, std::string>;

inline bool IsNull(const Value& v) {
  return std::holds_alternative<std::monostate>(v);
}

// Text form used in CSV cells, dataset answers and the console. NULL
// renders as the literal token NULL.
std::string RenderValue(const Value& v);

// Numeric view of an integer or decimal value; nullopt for text and NULL.
std::optional<Decimal> AsDecimal(const Value& v);

// True if `v` may be stored in a column of `type`. Integers are accepted
// by rational columns.
bool ConformsTo(const Value& v, ColumnType type);

// Converts `v` to the canonical representation for `type` (integer to
// decimal for rational columns). Precondition: ConformsTo(v, type).
Value CoerceTo(const Value& v, ColumnType type);

// Parses a CSV/text cell according to the column type.
std::optional<Value> ParseCell(std::string_view text, ColumnType type);

}  // namespace netstate

#endif  // NETSTATE_VALUE_H_
