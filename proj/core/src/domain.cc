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

#include <algorithm>
#include <cctype>

namespace netstate {
namespace {

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

Decimal Mbps(std::string_view text) { return *Decimal::Parse(text); }

std::vector<SfcCatalogEntry> BuildCatalog() {
  using V = VnfType;
  auto point = [](std::string_view v) { return Range<Decimal>{Mbps(v), Mbps(v)}; };
  return {
      {SfcType::kCg, {V::kNat, V::kFw, V::kVoc, V::kWo, V::kIdps}, point("4"),
       Decimal::FromInt(80), {40, 55}},
      {SfcType::kAr, {V::kNat, V::kFw, V::kTm, V::kVoc, V::kIdps}, point("100"),
       Decimal::FromInt(10), {1, 4}},
      {SfcType::kVoip, {V::kNat, V::kFw, V::kTm, V::kFw, V::kNat}, point("0.064"),
       Decimal::FromInt(100), {100, 200}},
      {SfcType::kVs, {V::kNat, V::kFw, V::kTm, V::kVoc, V::kIdps}, point("4"),
       Decimal::FromInt(100), {50, 100}},
      {SfcType::kMiot, {V::kNat, V::kFw, V::kIdps}, {Mbps("1"), Mbps("50")},
       Decimal::FromInt(5), {10, 15}},
      {SfcType::kInd40, {V::kNat, V::kFw}, point("70"), Decimal::FromInt(8), {1, 4}},
  };
}

}  // namespace

std::string_view VnfName(VnfType type) {
  switch (type) {
    case VnfType::kNat: return "NAT";
    case VnfType::kFw: return "FW";
    case VnfType::kIdps: return "IDPS";
    case VnfType::kVoc: return "VOC";
    case VnfType::kTm: return "TM";
    case VnfType::kWo: return "WO";
  }
  return "?";
}

std::string_view SfcName(SfcType type) {
  switch (type) {
    case SfcType::kCg: return "CG";
    case SfcType::kAr: return "AR";
    case SfcType::kVoip: return "VoIP";
    case SfcType::kVs: return "VS";
    case SfcType::kMiot: return "MIoT";
    case SfcType::kInd40: return "Ind4.0";
  }
  return "?";
}

UnknownNameError::UnknownNameError(std::string_view kind, std::string token)
    : Error("unknown " + std::string(kind) + " name '" + token + "'"),
      token_(std::move(token)) {}

SfcType ParseSfcType(std::string_view text) {
  std::string key = Lower(text);
  if (key == "ind 4.0") return SfcType::kInd40;
  for (SfcType t : kAllSfcTypes) {
    if (key == Lower(SfcName(t))) return t;
  }
  throw UnknownNameError("SFC type", std::string(text));
}

VnfType ParseVnfType(std::string_view text) {
  std::string key = Lower(text);
  for (VnfType t : kAllVnfTypes) {
    if (key == Lower(VnfName(t))) return t;
  }
  throw UnknownNameError("VNF type", std::string(text));
}

std::span<const SfcCatalogEntry> Catalog() {
  static const std::vector<SfcCatalogEntry> catalog = BuildCatalog();
  return catalog;
}

const SfcCatalogEntry& CatalogEntry(SfcType type) {
  return Catalog()[static_cast<size_t>(type)];
}

std::string RenderVnfSequence(std::span<const VnfType> sequence) {
  std::string out;
  for (VnfType v : sequence) {
    if (!out.empty()) out += '-';
    out += VnfName(v);
  }
  return out;
}

}  // namespace netstate
