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

#include "netstate/value.h"

#include <charconv>
#include <stdexcept>

namespace netstate {

Decimal Decimal::FromInt(int64_t value) {
  int64_t micros;
  if (__builtin_mul_overflow(value, kUnit, &micros)) {
    throw std::overflow_error("decimal overflow");
  }
  return FromMicros(micros);
}

std::optional<Decimal> Decimal::Parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  if (text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac =
      dot == std::string_view::npos ? std::string_view() : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) return std::nullopt;
  if (dot != std::string_view::npos && frac.empty()) return std::nullopt;
  if (frac.size() > static_cast<size_t>(kScale)) return std::nullopt;
  for (char c : whole) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  for (char c : frac) {
    if (c < '0' || c > '9') return std::nullopt;
  }

  int64_t units = 0;
  if (!whole.empty()) {
    auto [ptr, ec] = std::from_chars(whole.data(), whole.data() + whole.size(), units);
    if (ec != std::errc()) return std::nullopt;
  }
  int64_t fraction = 0;
  for (size_t i = 0; i < static_cast<size_t>(kScale); ++i) {
    fraction = fraction * 10 + (i < frac.size() ? frac[i] - '0' : 0);
  }
  int64_t micros;
  if (__builtin_mul_overflow(units, kUnit, &micros) ||
      __builtin_add_overflow(micros, fraction, &micros)) {
    return std::nullopt;
  }
  return FromMicros(negative ? -micros : micros);
}

std::string Decimal::ToString() const {
  // Work in unsigned space so INT64_MIN renders correctly.
  bool negative = micros_ < 0;
  uint64_t magnitude = negative ? uint64_t{0} - static_cast<uint64_t>(micros_)
                                : static_cast<uint64_t>(micros_);
  std::string out = negative ? "-" : "";
  out += std::to_string(magnitude / kUnit);
  uint64_t frac = magnitude % kUnit;
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, kScale - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out += '.';
    out += digits;
  }
  return out;
}

Decimal Decimal::operator+(Decimal other) const {
  int64_t r;
  if (__builtin_add_overflow(micros_, other.micros_, &r)) {
    throw std::overflow_error("decimal overflow");
  }
  return FromMicros(r);
}

Decimal Decimal::operator-(Decimal other) const {
  int64_t r;
  if (__builtin_sub_overflow(micros_, other.micros_, &r)) {
    throw std::overflow_error("decimal overflow");
  }
  return FromMicros(r);
}

Decimal Decimal::operator*(int64_t factor) const {
  int64_t r;
  if (__builtin_mul_overflow(micros_, factor, &r)) {
    throw std::overflow_error("decimal overflow");
  }
  return FromMicros(r);
}

Decimal Decimal::DivideRounded(int64_t divisor) const {
  if (divisor <= 0) throw std::invalid_argument("divisor must be positive");
  int64_t q = micros_ / divisor;
  int64_t r = micros_ % divisor;
  // |r| * 2 >= divisor rounds away from zero.
  uint64_t twice = static_cast<uint64_t>(r < 0 ? -r : r) * 2;
  if (twice >= static_cast<uint64_t>(divisor)) q += micros_ < 0 ? -1 : 1;
  return FromMicros(q);
}

std::string_view ColumnTypeName(ColumnType type) {
  switch (type) {
    case ColumnType::kInteger: return "INTEGER";
    case ColumnType::kRational: return "REAL";
    case ColumnType::kText: return "TEXT";
  }
  return "?";
}

std::string RenderValue(const Value& v) {
  struct Visitor {
    std::string operator()(std::monostate) const { return "NULL"; }
    std::string operator()(int64_t i) const { return std::to_string(i); }
    std::string operator()(Decimal d) const { return d.ToString(); }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

std::optional<Decimal> AsDecimal(const Value& v) {
  if (auto* i = std::get_if<int64_t>(&v)) return Decimal::FromInt(*i);
  if (auto* d = std::get_if<Decimal>(&v)) return *d;
  return std::nullopt;
}

bool ConformsTo(const Value& v, ColumnType type) {
  switch (type) {
    case ColumnType::kInteger: return std::holds_alternative<int64_t>(v);
    case ColumnType::kRational:
      return std::holds_alternative<int64_t>(v) || std::holds_alternative<Decimal>(v);
    case ColumnType::kText: return std::holds_alternative<std::string>(v);
  }
  return false;
}

Value CoerceTo(const Value& v, ColumnType type) {
  if (type == ColumnType::kRational) {
    if (auto* i = std::get_if<int64_t>(&v)) return Decimal::FromInt(*i);
  }
  return v;
}

std::optional<Value> ParseCell(std::string_view text, ColumnType type) {
  switch (type) {
    case ColumnType::kInteger: {
      int64_t i = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), i);
      if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
      return Value(i);
    }
    case ColumnType::kRational: {
      auto d = Decimal::Parse(text);
      if (!d) return std::nullopt;
      return Value(*d);
    }
    case ColumnType::kText:
      return Value(std::string(text));
  }
  return std::nullopt;
}

}  // namespace netstate
