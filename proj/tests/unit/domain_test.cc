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


#include "netstate/domain.h"

#include <gtest/gtest.h>

#include "net_oracle.h"

namespace netstate {
namespace {

TEST(DomainTest, CatalogMatchesPublishedTable) {
  auto catalog = Catalog();
  ASSERT_EQ(catalog.size(), std::size(oracle::kReferenceChains));
  for (size_t i = 0; i < catalog.size(); ++i) {
    const auto& want = oracle::kReferenceChains[i];
    const auto& got = catalog[i];
    SCOPED_TRACE(want.name);
    EXPECT_EQ(SfcName(got.sfc_type), want.name);
    EXPECT_EQ(RenderVnfSequence(got.vnf_sequence), want.vnfs);
    std::string bw = got.bandwidth_mbps.IsPoint()
                         ? got.bandwidth_mbps.min.ToString()
                         : got.bandwidth_mbps.min.ToString() + "-" + got.bandwidth_mbps.max.ToString();
    EXPECT_EQ(bw, want.bandwidth);
    EXPECT_EQ(got.max_e2e_ms, Decimal::FromInt(want.max_e2e_ms));
    EXPECT_EQ(got.bundle_range.min, want.bundle_min);
    EXPECT_EQ(got.bundle_range.max, want.bundle_max);
  }
}

TEST(DomainTest, CatalogEntryLookupAgreesWithOrder) {
  for (SfcType t : kAllSfcTypes) EXPECT_EQ(CatalogEntry(t).sfc_type, t);
}

TEST(DomainTest, ParsesNamesCaseInsensitively) {
  EXPECT_EQ(ParseSfcType("voip"), SfcType::kVoip);
  EXPECT_EQ(ParseSfcType("IND4.0"), SfcType::kInd40);
  EXPECT_EQ(ParseSfcType("Ind 4.0"), SfcType::kInd40);
  EXPECT_EQ(ParseVnfType("idps"), VnfType::kIdps);
  for (VnfType v : kAllVnfTypes) EXPECT_EQ(ParseVnfType(VnfName(v)), v);
  for (SfcType s : kAllSfcTypes) EXPECT_EQ(ParseSfcType(SfcName(s)), s);
}

TEST(DomainTest, UnknownNamesCarryTheToken) {
  try {
    ParseSfcType("XR");
    FAIL() << "expected UnknownNameError";
  } catch (const UnknownNameError& e) {
    EXPECT_EQ(e.token(), "XR");
  }
  EXPECT_THROW(ParseVnfType("DPI"), UnknownNameError);
}

TEST(DomainTest, RangeHelpers) {
  Range<int> r{10, 15};
  EXPECT_TRUE(r.Contains(10));
  EXPECT_TRUE(r.Contains(15));
  EXPECT_FALSE(r.Contains(16));
  EXPECT_FALSE(r.IsPoint());
  EXPECT_TRUE((Range<int>{4, 4}).IsPoint());
}

}  // namespace
}  // namespace netstate
