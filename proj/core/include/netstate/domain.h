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


#ifndef NETSTATE_DOMAIN_H_
#define NETSTATE_DOMAIN_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netstate/error.h"
#include "netstate/value.h"

namespace netstate {

enum class VnfType { kNat, kFw, kIdps, kVoc, kTm, kWo };
enum class SfcType { kCg, kAr, kVoip, kVs, kMiot, kInd40 };

inline constexpr std::array<VnfType, 6> kAllVnfTypes = {
    VnfType::kNat, VnfType::kFw, VnfType::kIdps,
    VnfType::kVoc, VnfType::kTm, VnfType::kWo};
inline constexpr std::array<SfcType, 6> kAllSfcTypes = {
    SfcType::kCg, SfcType::kAr, SfcType::kVoip,
    SfcType::kVs, SfcType::kMiot, SfcType::kInd40};

// Canonical names: NAT, FW, IDPS, VOC, TM, WO.
std::string_view VnfName(VnfType type);
// Canonical names: CG, AR, VoIP, VS, MIoT, Ind4.0.
std::string_view SfcName(SfcType type);

class UnknownNameError : public Error {
 public:
  UnknownNameError(std::string_view kind, std::string token);
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

// Case-insensitive. "Ind 4.0" is accepted as an alias of Ind4.0.
SfcType ParseSfcType(std::string_view text);
VnfType ParseVnfType(std::string_view text);

template <typename T>
struct Range {
  T min;
  T max;

  bool Contains(const T& v) const { return min <= v && v <= max; }
  bool IsPoint() const { return min == max; }
  friend bool operator==(const Range&, const Range&) = default;
};

struct SfcCatalogEntry {
  SfcType sfc_type;
  std::vector<VnfType> vnf_sequence;
  Range<Decimal> bandwidth_mbps;
  Decimal max_e2e_ms;
  Range<int> bundle_range;

  friend bool operator==(const SfcCatalogEntry&, const SfcCatalogEntry&) = default;
};

// The six service chains with their VNF sequences, bandwidth, latency
// bound and request-bundle range. Immutable, one entry per SfcType in
// kAllSfcTypes order.
std::span<const SfcCatalogEntry> Catalog();
const SfcCatalogEntry& CatalogEntry(SfcType type);

// "NAT-FW-VOC-WO-IDPS".
std::string RenderVnfSequence(std::span<const VnfType> sequence);

struct DataCenterSpec {
  int dc_id = 0;
  Decimal total_storage_gb;
  Decimal total_cpu_units;

  friend bool operator==(const DataCenterSpec&, const DataCenterSpec&) = default;
};

}  // namespace netstate

#endif  // NETSTATE_DOMAIN_H_
