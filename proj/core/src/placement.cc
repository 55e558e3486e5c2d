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

#include <algorithm>

namespace netstate {
namespace {

bool Fits(const std::pair<Decimal, Decimal>& avail, const VnfRequirement& req) {
  return avail.first >= req.storage_gb && avail.second >= req.cpu_units;
}

template <typename T>
auto FindById(std::vector<T>& rows, int64_t id, int64_t T::*key) {
  return std::lower_bound(rows.begin(), rows.end(), id,
                          [key](const T& row, int64_t v) { return row.*key < v; });
}

}  // namespace

Decimal LatencyOf(std::span<const int> placement, SfcType sfc_type,
                  const DelayModel& delays) {
  const auto& entry = CatalogEntry(sfc_type);
  if (placement.size() != entry.vnf_sequence.size()) {
    throw Error("placement covers " + std::to_string(placement.size()) + " of " +
                std::to_string(entry.vnf_sequence.size()) + " VNFs of " +
                std::string(SfcName(sfc_type)));
  }
  Decimal total = delays.processing_delay_ms * static_cast<int64_t>(placement.size());
  for (size_t i = 1; i < placement.size(); ++i) {
    if (placement[i] != placement[i - 1]) total += delays.hop_delay_ms;
  }
  return total;
}

PlacementSimulator::PlacementSimulator(Scenario scenario, uint64_t seed)
    : scenario_(std::move(scenario)), rng_(seed) {
  scenario_.Validate();
  std::sort(scenario_.data_centers.begin(), scenario_.data_centers.end(),
            [](const auto& a, const auto& b) { return a.dc_id < b.dc_id; });
  for (const auto& spec : scenario_.data_centers) {
    state_.data_centers.push_back({spec, spec.total_storage_gb, spec.total_cpu_units});
  }
}

size_t PlacementSimulator::DcIndex(int dc_id) const {
  for (size_t i = 0; i < state_.data_centers.size(); ++i) {
    if (state_.data_centers[i].spec.dc_id == dc_id) return i;
  }
  throw Error("unknown DC " + std::to_string(dc_id));
}

std::vector<Arrival> PlacementSimulator::DrawArrivals() {
  std::vector<Arrival> arrivals;
  for (int i = 0; i < scenario_.bundles_per_step; ++i) {
    auto type = kAllSfcTypes[UniformInt(rng_, 0, kAllSfcTypes.size() - 1)];
    const auto& range = CatalogEntry(type).bundle_range;
    arrivals.push_back({type, static_cast<int>(UniformInt(rng_, range.min, range.max))});
  }
  return arrivals;
}

PlacementSimulator::Placement PlacementSimulator::Plan(SfcType type) const {
  std::vector<std::pair<Decimal, Decimal>> avail;
  for (const auto& dc : state_.data_centers) {
    avail.emplace_back(dc.available_storage_gb, dc.available_cpu_units);
  }
  Placement plan;
  for (VnfType vnf : CatalogEntry(type).vnf_sequence) {
    const auto& req = scenario_.requirement(vnf);
    int64_t reuse = 0;
    size_t target = avail.size();
    for (size_t i = 0; i < avail.size() && target == avail.size(); ++i) {
      if (!Fits(avail[i], req)) continue;
      auto it = idle_.find({state_.data_centers[i].spec.dc_id, vnf});
      if (it == idle_.end()) continue;
      for (int64_t id : it->second) {
        if (std::find(plan.reused.begin(), plan.reused.end(), id) == plan.reused.end()) {
          reuse = id;
          target = i;
          break;
        }
      }
    }
    if (target == avail.size()) {
      for (size_t i = 0; i < avail.size(); ++i) {
        if (Fits(avail[i], req)) {
          target = i;
          break;
        }
      }
    }
    if (target == avail.size()) return plan;
    avail[target].first -= req.storage_gb;
    avail[target].second -= req.cpu_units;
    plan.dcs.push_back(state_.data_centers[target].spec.dc_id);
    plan.reused.push_back(reuse);
  }
  plan.complete = true;
  return plan;
}

void PlacementSimulator::PlaceRequest(SfcType type) {
  const auto& entry = CatalogEntry(type);
  SfcRequestRecord record;
  record.sfc_id = next_sfc_id_++;
  record.sfc_type = type;
  record.bandwidth_mbps = entry.bandwidth_mbps.min;
  if (!entry.bandwidth_mbps.IsPoint()) {
    // Sampled at 0.001 Mbps granularity.
    constexpr int64_t kStep = Decimal::kUnit / 1000;
    record.bandwidth_mbps = Decimal::FromMicros(
        UniformInt(rng_, entry.bandwidth_mbps.min.micros() / kStep,
                   entry.bandwidth_mbps.max.micros() / kStep) *
        kStep);
  }

  Placement plan = Plan(type);
  if (plan.complete) {
    record.e2e_latency_ms = LatencyOf(plan.dcs, type, scenario_.delays);
    record.dc_id = plan.dcs.front();
    if (record.e2e_latency_ms <= entry.max_e2e_ms) {
      ActiveRequest active{state_.time_step + scenario_.hold_steps, {}};
      for (size_t pos = 0; pos < plan.dcs.size(); ++pos) {
        VnfType vnf = entry.vnf_sequence[pos];
        const auto& req = scenario_.requirement(vnf);
        auto& dc = state_.data_centers[DcIndex(plan.dcs[pos])];
        dc.available_storage_gb -= req.storage_gb;
        dc.available_cpu_units -= req.cpu_units;
        if (plan.reused[pos] != 0) {
          auto inst = FindById(state_.vnf_instances, plan.reused[pos], &VnfInstance::vnf_id);
          inst->status = VnfStatus::kActive;
          idle_[{inst->dc_id, vnf}].erase(inst->vnf_id);
          active.instances.push_back(inst->vnf_id);
        } else {
          VnfInstance inst{next_vnf_id_++, vnf,           plan.dcs[pos],
                           VnfStatus::kActive, req.cpu_units, req.storage_gb};
          state_.vnf_instances.push_back(inst);
          active.instances.push_back(inst.vnf_id);
        }
      }
      record.status = RequestStatus::kAccepted;
      active_.emplace(record.sfc_id, std::move(active));
      state_.sfc_requests.push_back(record);
      return;
    }
  } else {
    // Positions the planner could not fill are treated as co-located with
    // their predecessor so the record still carries an attempted latency.
    int fill = plan.dcs.empty() ? state_.data_centers.front().spec.dc_id : plan.dcs.back();
    plan.dcs.resize(entry.vnf_sequence.size(), fill);
    record.e2e_latency_ms = LatencyOf(plan.dcs, type, scenario_.delays);
    record.dc_id = plan.dcs.front();
  }
  record.status = RequestStatus::kRejected;
  finished_at_.emplace(record.sfc_id, state_.time_step);
  state_.sfc_requests.push_back(record);
}

void PlacementSimulator::ExpireRequests() {
  const int64_t now = state_.time_step;
  for (auto it = active_.begin(); it != active_.end();) {
    if (it->second.finish_step > now) {
      ++it;
      continue;
    }
    for (int64_t vnf_id : it->second.instances) {
      auto inst = FindById(state_.vnf_instances, vnf_id, &VnfInstance::vnf_id);
      inst->status = VnfStatus::kIdle;
      auto& dc = state_.data_centers[DcIndex(inst->dc_id)];
      dc.available_storage_gb += inst->storage_req;
      dc.available_cpu_units += inst->cpu_req;
      idle_[{inst->dc_id, inst->vnf_type}].insert(vnf_id);
    }
    FindById(state_.sfc_requests, it->first, &SfcRequestRecord::sfc_id)->status =
        RequestStatus::kCompleted;
    finished_at_.emplace(it->first, now);
    it = active_.erase(it);
  }

  std::erase_if(state_.sfc_requests, [&](const SfcRequestRecord& r) {
    auto f = finished_at_.find(r.sfc_id);
    if (f == finished_at_.end() || now - f->second <= scenario_.retain_finished_steps) {
      return false;
    }
    finished_at_.erase(f);
    return true;
  });
}

const NetworkState& PlacementSimulator::Step(std::span<const Arrival> arrivals) {
  for (const auto& a : arrivals) {
    if (!CatalogEntry(a.sfc_type).bundle_range.Contains(a.bundle_size)) {
      throw Error("bundle of " + std::to_string(a.bundle_size) + " " +
                  std::string(SfcName(a.sfc_type)) + " requests is outside the catalog range");
    }
  }
  ++state_.time_step;
  ExpireRequests();
  for (const auto& a : arrivals) {
    for (int i = 0; i < a.bundle_size; ++i) PlaceRequest(a.sfc_type);
  }
  return state_;
}

std::vector<NetworkState> Run(const Scenario& scenario, int horizon, uint64_t seed) {
  if (horizon < 0) throw ConfigError("horizon must be non-negative");
  PlacementSimulator sim(scenario, seed);
  std::vector<NetworkState> states{sim.state()};
  states.reserve(static_cast<size_t>(horizon) + 1);
  for (int t = 0; t < horizon; ++t) {
    auto arrivals = sim.DrawArrivals();
    states.push_back(sim.Step(arrivals));
  }
  return states;
}

}  // namespace netstate
