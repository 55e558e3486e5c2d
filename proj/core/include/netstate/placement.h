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


#ifndef NETSTATE_PLACEMENT_H_
#define NETSTATE_PLACEMENT_H_

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "netstate/network_state.h"
#include "netstate/random.h"
#include "netstate/scenario.h"

namespace netstate {

struct Arrival {
  SfcType sfc_type;
  int bundle_size;
};

// Processing delay per VNF plus one hop delay for every adjacent pair of
// VNFs placed on different DCs. `placement` holds the DC of each VNF in
// catalog sequence order and must cover the whole sequence.
Decimal LatencyOf(std::span<const int> placement, SfcType sfc_type,
                  const DelayModel& delays);

// Greedy first-fit placement. For every VNF of a request, in chain order,
// reuse an idle instance of the right type on the lowest-id DC that can
// host it, else start a new instance on the lowest-id DC with capacity. A
// request is rejected as a whole if any VNF cannot be placed or the chain
// latency exceeds its bound. Idle instances hold no resources.
class PlacementSimulator {
 public:
  PlacementSimulator(Scenario scenario, uint64_t seed);

  const NetworkState& state() const { return state_; }
  const Scenario& scenario() const { return scenario_; }

  // Advances one time step: expires requests whose hold time is over,
  // drops finished records past the retention window, then places every
  // request of every bundle in order. Bundle sizes must lie in the
  // catalog's bundle range.
  const NetworkState& Step(std::span<const Arrival> arrivals);

  // Draws the next step's bundles from the seeded generator.
  std::vector<Arrival> DrawArrivals();

 private:
  struct Placement {
    std::vector<int> dcs;
    std::vector<int64_t> reused;   // idle instance per position, or 0
    bool complete = false;
  };
  struct ActiveRequest {
    int64_t finish_step;
    std::vector<int64_t> instances;
  };

  size_t DcIndex(int dc_id) const;
  Placement Plan(SfcType type) const;
  void PlaceRequest(SfcType type);
  void ExpireRequests();

  Scenario scenario_;
  Rng rng_;
  NetworkState state_;
  int64_t next_vnf_id_ = 1;
  int64_t next_sfc_id_ = 1;
  std::map<int64_t, ActiveRequest> active_;           // by sfc_id
  std::map<int64_t, int64_t> finished_at_;            // sfc_id -> step
  std::map<std::pair<int, VnfType>, std::set<int64_t>> idle_;  // (dc, type)
};

// Initial state plus one state per step.
std::vector<NetworkState> Run(const Scenario& scenario, int horizon, uint64_t seed);

}  // namespace netstate

#endif  // NETSTATE_PLACEMENT_H_
