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


#include "netstate/placement.h"

#include <gtest/gtest.h>

#include <filesystem>

#include "net_oracle.h"

namespace netstate {
namespace {

Scenario MakeScenario(std::vector<std::pair<int, int>> dc_cpu, int hold = 10, int retain = 10) {
  Scenario s;
  for (auto [id, cpu] : dc_cpu) {
    s.data_centers.push_back({id, Decimal::FromInt(1000), Decimal::FromInt(cpu)});
  }
  s.hold_steps = hold;
  s.retain_finished_steps = retain;
  return s;
}

TEST(LatencyTest, ProcessingPlusHops) {
  DelayModel d;
  std::vector<int> same = {1, 1};
  std::vector<int> split = {1, 2};
  std::vector<int> zigzag = {1, 2, 1, 1, 3};
  EXPECT_EQ(LatencyOf(same, SfcType::kInd40, d), Decimal::FromInt(2));
  EXPECT_EQ(LatencyOf(split, SfcType::kInd40, d), Decimal::FromInt(5));
  EXPECT_EQ(LatencyOf(zigzag, SfcType::kCg, d), Decimal::FromInt(5 + 3 * 3));
  EXPECT_THROW(LatencyOf(same, SfcType::kCg, d), Error);
}

TEST(PlacementTest, FillsLowestDcThenRejectsWhenFull) {
  PlacementSimulator sim(MakeScenario({{1, 10}}), 1);
  Arrival a{SfcType::kInd40, 4};
  const NetworkState& s = sim.Step({&a, 1});
  ASSERT_EQ(s.sfc_requests.size(), 4u);
  EXPECT_EQ(s.sfc_requests[0].status, RequestStatus::kAccepted);
  EXPECT_EQ(s.sfc_requests[1].status, RequestStatus::kAccepted);
  EXPECT_EQ(s.sfc_requests[2].status, RequestStatus::kRejected);
  EXPECT_EQ(s.sfc_requests[3].status, RequestStatus::kRejected);
  EXPECT_EQ(s.sfc_requests[0].e2e_latency_ms, Decimal::FromInt(2));
  EXPECT_EQ(s.sfc_requests[2].e2e_latency_ms, Decimal::FromInt(2));
  EXPECT_EQ(s.vnf_instances.size(), 4u);
  EXPECT_EQ(s.data_centers[0].available_cpu_units, Decimal::FromInt(2));
  EXPECT_EQ(s.sfc_requests[0].bandwidth_mbps, Decimal::FromInt(70));
  EXPECT_TRUE(oracle::ConservationViolations(s).empty());
}

TEST(PlacementTest, SpillsToNextDcAndChecksLatencyBound) {
  {
    PlacementSimulator sim(MakeScenario({{2, 100}, {1, 2}}), 1);
    Arrival a{SfcType::kInd40, 1};
    const NetworkState& s = sim.Step({&a, 1});
    ASSERT_EQ(s.sfc_requests.size(), 1u);
    EXPECT_EQ(s.sfc_requests[0].status, RequestStatus::kAccepted);
    EXPECT_EQ(s.sfc_requests[0].dc_id, 1);
    EXPECT_EQ(s.sfc_requests[0].e2e_latency_ms, Decimal::FromInt(5));
    EXPECT_EQ(s.vnf_instances[0].dc_id, 1);
    EXPECT_EQ(s.vnf_instances[1].dc_id, 2);
  }
  {
    // NAT on DC 1, FW and IDPS on DC 2: 3 + 3 = 6 ms exceeds MIoT's 5 ms.
    PlacementSimulator sim(MakeScenario({{1, 2}, {2, 100}}), 1);
    Arrival a{SfcType::kMiot, 10};
    const NetworkState& s = sim.Step({&a, 1});
    EXPECT_EQ(s.sfc_requests[0].status, RequestStatus::kRejected);
    EXPECT_EQ(s.sfc_requests[0].e2e_latency_ms, Decimal::FromInt(6));
    EXPECT_TRUE(s.vnf_instances.empty());
    EXPECT_EQ(s.data_centers[0].available_cpu_units, Decimal::FromInt(2));
    for (const auto& r : s.sfc_requests) {
      EXPECT_GE(r.bandwidth_mbps, Decimal::FromInt(1));
      EXPECT_LE(r.bandwidth_mbps, Decimal::FromInt(50));
      EXPECT_EQ(r.bandwidth_mbps.micros() % 1000, 0);
    }
  }
}

TEST(PlacementTest, ExpiryReleasesAndReusesInstances) {
  PlacementSimulator sim(MakeScenario({{1, 100}}, /*hold=*/2, /*retain=*/0), 1);
  Arrival a{SfcType::kInd40, 1};
  sim.Step({&a, 1});  // step 1, finishes at 3
  sim.Step({});       // step 2
  EXPECT_EQ(sim.state().data_centers[0].available_cpu_units, Decimal::FromInt(96));
  const NetworkState& s3 = sim.Step({});  // step 3
  ASSERT_EQ(s3.sfc_requests.size(), 1u);
  EXPECT_EQ(s3.sfc_requests[0].status, RequestStatus::kCompleted);
  EXPECT_EQ(s3.data_centers[0].available_cpu_units, Decimal::FromInt(100));
  for (const auto& v : s3.vnf_instances) EXPECT_EQ(v.status, VnfStatus::kIdle);

  const NetworkState& s4 = sim.Step({&a, 1});
  EXPECT_EQ(s4.vnf_instances.size(), 2u);  // reused, no new instances
  for (const auto& v : s4.vnf_instances) EXPECT_EQ(v.status, VnfStatus::kActive);
  ASSERT_EQ(s4.sfc_requests.size(), 1u);   // completed record aged out
  EXPECT_EQ(s4.sfc_requests[0].sfc_id, 2);
  EXPECT_TRUE(oracle::ConservationViolations(s4).empty());
}

TEST(PlacementTest, RejectsBundleOutsideCatalogRange) {
  PlacementSimulator sim(MakeScenario({{1, 100}}), 1);
  Arrival a{SfcType::kCg, 3};
  EXPECT_THROW(sim.Step({&a, 1}), Error);
  EXPECT_EQ(sim.state().time_step, 0);
}

TEST(PlacementTest, SeededRunsAreReproducibleAndConserve) {
  Scenario s = Scenario::Load(std::filesystem::path(NETSTATE_SOURCE_DIR) / "scenarios/three_dc.json");
  auto a = netstate::Run(s, 60, 5);
  auto b = netstate::Run(s, 60, 5);
  auto c = netstate::Run(s, 60, 6);
  ASSERT_EQ(a.size(), 61u);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].time_step, static_cast<int64_t>(i));
    auto v = oracle::ConservationViolations(a[i]);
    EXPECT_TRUE(v.empty()) << v.front();
    EXPECT_TRUE(CheckInvariants(a[i]).empty());
  }
}

TEST(TrajectoryTest, JsonLinesRoundTrip) {
  Scenario s = MakeScenario({{1, 50}, {2, 50}});
  s.vnf_requirements[static_cast<size_t>(VnfType::kVoc)].cpu_units = *Decimal::Parse("3.25");
  auto traj = netstate::Run(s, 8, 3);
  auto path = std::filesystem::temp_directory_path() / "netstate_traj_test.jsonl";
  WriteTrajectory(path, traj);
  EXPECT_EQ(ReadTrajectory(path), traj);
  std::filesystem::remove(path);
  EXPECT_THROW(StateFromJsonLine("{\"time_step\": 1}"), ConfigError);
}

TEST(InvariantTest, DetectsImbalance) {
  auto traj = netstate::Run(MakeScenario({{1, 50}}), 3, 2);
  NetworkState broken = traj.back();
  broken.data_centers[0].available_cpu_units += Decimal::FromInt(1);
  EXPECT_FALSE(CheckInvariants(broken).empty());
  EXPECT_FALSE(oracle::ConservationViolations(broken).empty());
}

}  // namespace
}  // namespace netstate
