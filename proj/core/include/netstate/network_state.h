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


#ifndef NETSTATE_NETWORK_STATE_H_
#define NETSTATE_NETWORK_STATE_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netstate/domain.h"
#include "netstate/value.h"

namespace netstate {

enum class VnfStatus { kIdle, kActive };
enum class RequestStatus { kAccepted, kRejected, kCompleted };

// "idle"/"active" and "accepted"/"rejected"/"completed".
std::string_view StatusName(VnfStatus status);
std::string_view StatusName(RequestStatus status);
VnfStatus ParseVnfStatus(std::string_view text);
RequestStatus ParseRequestStatus(std::string_view text);

struct VnfInstance {
  int64_t vnf_id = 0;
  VnfType vnf_type = VnfType::kNat;
  int dc_id = 0;
  VnfStatus status = VnfStatus::kIdle;
  Decimal cpu_req;
  Decimal storage_req;

  friend bool operator==(const VnfInstance&, const VnfInstance&) = default;
};

struct SfcRequestRecord {
  int64_t sfc_id = 0;
  SfcType sfc_type = SfcType::kCg;
  int dc_id = 0;  // DC hosting the chain's first VNF
  Decimal e2e_latency_ms;
  Decimal bandwidth_mbps;
  RequestStatus status = RequestStatus::kAccepted;

  friend bool operator==(const SfcRequestRecord&, const SfcRequestRecord&) = default;
};

struct DataCenterState {
  DataCenterSpec spec;
  Decimal available_storage_gb;
  Decimal available_cpu_units;

  friend bool operator==(const DataCenterState&, const DataCenterState&) = default;
};

// Snapshot of the network after one simulator step.
struct NetworkState {
  int64_t time_step = 0;
  std::vector<DataCenterState> data_centers;
  std::vector<VnfInstance> vnf_instances;
  std::vector<SfcRequestRecord> sfc_requests;

  friend bool operator==(const NetworkState&, const NetworkState&) = default;
};

// Checks bounds, id uniqueness, resource conservation per DC and the
// latency bound of accepted requests. Returns one message per violation.
std::vector<std::string> CheckInvariants(const NetworkState& state);

// One NetworkState per line.
std::string StateToJsonLine(const NetworkState& state);
NetworkState StateFromJsonLine(std::string_view line);
void WriteTrajectory(const std::filesystem::path& path,
                     std::span<const NetworkState> states);
std::vector<NetworkState> ReadTrajectory(const std::filesystem::path& path);

}  // namespace netstate

#endif  // NETSTATE_NETWORK_STATE_H_
