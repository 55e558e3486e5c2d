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

#include <gtest/gtest.h>

#include <random>

namespace netstate {
namespace {

TEST(DecimalTest, ParsesAndRendersShortestForm) {
  EXPECT_EQ(Decimal::Parse("79.2")->ToString(), "79.2");
  EXPECT_EQ(Decimal::Parse("0.064")->ToString(), "0.064");
  EXPECT_EQ(Decimal::Parse("10.000")->ToString(), "10");
  EXPECT_EQ(Decimal::Parse("-3.50")->ToString(), "-3.5");
  EXPECT_EQ(Decimal::Parse(".5")->ToString(), "0.5");
  EXPECT_EQ(Decimal::Parse("0.000001")->micros(), 1);
}

TEST(DecimalTest, RejectsMalformedText) {
  for (const char* bad : {"", "-", ".", "1.", "1.2.3", "1e3", "+1", "0.0000001", "abc", " 1",
                          "99999999999999999999"}) {
    EXPECT_FALSE(Decimal::Parse(bad).has_value()) << bad;
  }
}

TEST(DecimalTest, ArithmeticIsExact) {
  Decimal a = *Decimal::Parse("0.1");
  Decimal sum;
  for (int i = 0; i < 10; ++i) sum += a;
  EXPECT_EQ(sum, Decimal::FromInt(1));
  EXPECT_EQ((Decimal::FromInt(5) - *Decimal::Parse("0.25")).ToString(), "4.75");
  EXPECT_EQ((*Decimal::Parse("1.5") * 3).ToString(), "4.5");
}

TEST(DecimalTest, DivideRoundsHalfAwayFromZero) {
  EXPECT_EQ(Decimal::FromMicros(5).DivideRounded(2).micros(), 3);
  EXPECT_EQ(Decimal::FromMicros(-5).DivideRounded(2).micros(), -3);
  EXPECT_EQ(Decimal::FromMicros(4).DivideRounded(3).micros(), 1);
  EXPECT_EQ(Decimal::FromInt(10).DivideRounded(3).ToString(), "3.333333");
  EXPECT_EQ(Decimal::FromInt(20).DivideRounded(3).ToString(), "6.666667");
  EXPECT_THROW(Decimal::FromInt(1).DivideRounded(0), std::invalid_argument);
}

TEST(DecimalTest, OverflowThrows) {
  Decimal big = Decimal::FromMicros(INT64_MAX);
  EXPECT_THROW(big + Decimal::FromMicros(1), std::overflow_error);
  EXPECT_THROW(Decimal::FromInt(INT64_MAX / 10), std::overflow_error);
  EXPECT_EQ(Decimal::FromMicros(INT64_MIN).ToString(), "-9223372036854.775808");
}

TEST(DecimalTest, RenderParseRoundTripOnRandomValues) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int64_t> dist(-1'000'000'000'000, 1'000'000'000'000);
  for (int i = 0; i < 2000; ++i) {
    Decimal d = Decimal::FromMicros(dist(rng));
    EXPECT_EQ(Decimal::Parse(d.ToString()), d);
  }
}

TEST(ValueTest, RendersAndConforms) {
  EXPECT_EQ(RenderValue(Value()), "NULL");
  EXPECT_EQ(RenderValue(Value(int64_t{7})), "7");
  EXPECT_EQ(RenderValue(Value(std::string("idle"))), "idle");
  EXPECT_TRUE(ConformsTo(Value(int64_t{1}), ColumnType::kRational));
  EXPECT_FALSE(ConformsTo(Value(Decimal::FromInt(1)), ColumnType::kInteger));
  EXPECT_FALSE(ConformsTo(Value(std::string("1")), ColumnType::kInteger));
  EXPECT_EQ(CoerceTo(Value(int64_t{3}), ColumnType::kRational), Value(Decimal::FromInt(3)));
}

TEST(ValueTest, ParsesCellsByColumnType) {
  EXPECT_EQ(ParseCell("42", ColumnType::kInteger), Value(int64_t{42}));
  EXPECT_FALSE(ParseCell("4.2", ColumnType::kInteger).has_value());
  EXPECT_EQ(ParseCell("4.2", ColumnType::kRational), Value(*Decimal::Parse("4.2")));
  EXPECT_EQ(ParseCell("", ColumnType::kText), Value(std::string()));
  EXPECT_EQ(ColumnTypeName(ColumnType::kRational), "REAL");
}

}  // namespace
}  // namespace netstate
