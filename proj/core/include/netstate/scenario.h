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


#ifndef NETSTATE_SCENARIO_H_
#define NETSTATE_SCENARIO_H_

#include <array>
#include <filesystem>
#include <string_view>
#include <vector>

#include "netstate/domain.h"
#include "netstate/value.h"

namespace netstate {

struct VnfRequirement {
  Decimal cpu_units = Decimal::FromInt(2);
  Decimal storage_gb = Decimal::FromInt(5);

  friend bool operator==(const VnfRequirement&, const VnfRequirement&) = default;
};

struct DelayModel {
  Decimal processing_delay_ms = Decimal::FromInt(1);
  Decimal hop_delay_ms = Decimal::FromInt(3);
};

// Simulation inputs that the catalog does not fix: DC capacities, per-VNF
// resource demands, delay constants and request lifetimes.
struct Scenario {
  std::vector<DataCenterSpec> data_centers;
  int horizon = 50;
  std::array<VnfRequirement, kAllVnfTypes.size()> vnf_requirements{};
  DelayModel delays;
  int hold_steps = 10;             // accepted request lifetime
  int retain_finished_steps = 10;  // how long completed/rejected rows stay visible
  int bundles_per_step = 1;

  const VnfRequirement& requirement(VnfType type) const {
    return vnf_requirements[static_cast<size_t>(type)];
  }

  // Throws ConfigError describing the first problem found.
  void Validate() const;

  static Scenario FromJson(std::string_view text);
  static Scenario Load(const std::filesystem::path& path);
};

}  // namespace netstate

#endif  // NETSTATE_SCENARIO_H_
