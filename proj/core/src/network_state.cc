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


#include "netstate/network_state.h"

#include <fstream>
#include <map>
#include <set>

#include "json_util.h"

namespace netstate {

using internal::DecimalFromJson;
using internal::DecimalToJson;
using internal::Field;
using internal::Json;

std::string_view StatusName(VnfStatus status) {
  return status == VnfStatus::kIdle ? "idle" : "active";
}

std::string_view StatusName(RequestStatus status) {
  switch (status) {
    case RequestStatus::kAccepted: return "accepted";
    case RequestStatus::kRejected: return "rejected";
    case RequestStatus::kCompleted: return "completed";
  }
  return "?";
}

VnfStatus ParseVnfStatus(std::string_view text) {
  if (text == "idle") return VnfStatus::kIdle;
  if (text == "active") return VnfStatus::kActive;
  throw UnknownNameError("VNF status", std::string(text));
}

RequestStatus ParseRequestStatus(std::string_view text) {
  if (text == "accepted") return RequestStatus::kAccepted;
  if (text == "rejected") return RequestStatus::kRejected;
  if (text == "completed") return RequestStatus::kCompleted;
  throw UnknownNameError("request status", std::string(text));
}

std::vector<std::string> CheckInvariants(const NetworkState& state) {
  std::vector<std::string> problems;
  auto report = [&](std::string msg) { problems.push_back(std::move(msg)); };

  std::map<int, std::pair<Decimal, Decimal>> used;  // dc -> (storage, cpu)
  for (const auto& dc : state.data_centers) {
    const auto& s = dc.spec;
    std::string id = std::to_string(s.dc_id);
    if (s.dc_id <= 0) report("dc_id " + id + " is not positive");
    if (!used.emplace(s.dc_id, std::pair<Decimal, Decimal>{}).second) {
      report("duplicate dc_id " + id);
    }
    if (dc.available_storage_gb < Decimal() ||
        dc.available_storage_gb > s.total_storage_gb) {
      report("DC " + id + " available storage out of bounds");
    }
    if (dc.available_cpu_units < Decimal() || dc.available_cpu_units > s.total_cpu_units) {
      report("DC " + id + " available CPU out of bounds");
    }
  }

  std::set<int64_t> vnf_ids;
  for (const auto& vnf : state.vnf_instances) {
    std::string id = std::to_string(vnf.vnf_id);
    if (vnf.vnf_id <= 0) report("vnf_id " + id + " is not positive");
    if (!vnf_ids.insert(vnf.vnf_id).second) report("duplicate vnf_id " + id);
    auto it = used.find(vnf.dc_id);
    if (it == used.end()) {
      report("VNF " + id + " placed on unknown DC " + std::to_string(vnf.dc_id));
      continue;
    }
    if (vnf.status == VnfStatus::kActive) {
      it->second.first += vnf.storage_req;
      it->second.second += vnf.cpu_req;
    }
  }

  for (const auto& dc : state.data_centers) {
    const auto& [storage, cpu] = used[dc.spec.dc_id];
    std::string id = std::to_string(dc.spec.dc_id);
    if (storage != dc.spec.total_storage_gb - dc.available_storage_gb) {
      report("DC " + id + " storage not conserved: active instances use " +
             storage.ToString() + " GB");
    }
    if (cpu != dc.spec.total_cpu_units - dc.available_cpu_units) {
      report("DC " + id + " CPU not conserved: active instances use " +
             cpu.ToString() + " units");
    }
  }

  std::set<int64_t> sfc_ids;
  for (const auto& req : state.sfc_requests) {
    std::string id = std::to_string(req.sfc_id);
    if (req.sfc_id <= 0) report("sfc_id " + id + " is not positive");
    if (!sfc_ids.insert(req.sfc_id).second) report("duplicate sfc_id " + id);
    if (req.status == RequestStatus::kAccepted &&
        req.e2e_latency_ms > CatalogEntry(req.sfc_type).max_e2e_ms) {
      report("request " + id + " accepted above its latency bound");
    }
  }
  return problems;
}

std::string StateToJsonLine(const NetworkState& state) {
  Json dcs = Json::array();
  for (const auto& dc : state.data_centers) {
    dcs.push_back({{"dc_id", dc.spec.dc_id},
                   {"total_storage_gb", DecimalToJson(dc.spec.total_storage_gb)},
                   {"available_storage_gb", DecimalToJson(dc.available_storage_gb)},
                   {"total_cpu_units", DecimalToJson(dc.spec.total_cpu_units)},
                   {"available_cpu_units", DecimalToJson(dc.available_cpu_units)}});
  }
  Json vnfs = Json::array();
  for (const auto& v : state.vnf_instances) {
    vnfs.push_back({{"vnf_id", v.vnf_id},
                    {"vnf_type", VnfName(v.vnf_type)},
                    {"dc_id", v.dc_id},
                    {"status", StatusName(v.status)},
                    {"cpu_req", DecimalToJson(v.cpu_req)},
                    {"storage_req", DecimalToJson(v.storage_req)}});
  }
  Json reqs = Json::array();
  for (const auto& r : state.sfc_requests) {
    reqs.push_back({{"sfc_id", r.sfc_id},
                    {"sfc_type", SfcName(r.sfc_type)},
                    {"dc_id", r.dc_id},
                    {"e2e_latency_ms", DecimalToJson(r.e2e_latency_ms)},
                    {"bandwidth_mbps", DecimalToJson(r.bandwidth_mbps)},
                    {"status", StatusName(r.status)}});
  }
  Json line = {{"time_step", state.time_step},
               {"data_centers", std::move(dcs)},
               {"vnf_instances", std::move(vnfs)},
               {"sfc_requests", std::move(reqs)}};
  return line.dump();
}

NetworkState StateFromJsonLine(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("malformed trajectory line: ") + e.what());
  }
  NetworkState state;
  try {
  state.time_step = Field<int64_t>(j, "time_step");
  for (const auto& dc : Field<Json>(j, "data_centers")) {
    DataCenterState s;
    s.spec.dc_id = Field<int>(dc, "dc_id");
    s.spec.total_storage_gb = DecimalFromJson(dc.at("total_storage_gb"), "total_storage_gb");
    s.spec.total_cpu_units = DecimalFromJson(dc.at("total_cpu_units"), "total_cpu_units");
    s.available_storage_gb =
        DecimalFromJson(dc.at("available_storage_gb"), "available_storage_gb");
    s.available_cpu_units =
        DecimalFromJson(dc.at("available_cpu_units"), "available_cpu_units");
    state.data_centers.push_back(s);
  }
  for (const auto& v : Field<Json>(j, "vnf_instances")) {
    VnfInstance inst;
    inst.vnf_id = Field<int64_t>(v, "vnf_id");
    inst.vnf_type = ParseVnfType(Field<std::string>(v, "vnf_type"));
    inst.dc_id = Field<int>(v, "dc_id");
    inst.status = ParseVnfStatus(Field<std::string>(v, "status"));
    inst.cpu_req = DecimalFromJson(v.at("cpu_req"), "cpu_req");
    inst.storage_req = DecimalFromJson(v.at("storage_req"), "storage_req");
    state.vnf_instances.push_back(inst);
  }
  for (const auto& r : Field<Json>(j, "sfc_requests")) {
    SfcRequestRecord rec;
    rec.sfc_id = Field<int64_t>(r, "sfc_id");
    rec.sfc_type = ParseSfcType(Field<std::string>(r, "sfc_type"));
    rec.dc_id = Field<int>(r, "dc_id");
    rec.e2e_latency_ms = DecimalFromJson(r.at("e2e_latency_ms"), "e2e_latency_ms");
    rec.bandwidth_mbps = DecimalFromJson(r.at("bandwidth_mbps"), "bandwidth_mbps");
    rec.status = ParseRequestStatus(Field<std::string>(r, "status"));
    state.sfc_requests.push_back(rec);
  }
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("malformed trajectory line: ") + e.what());
  }
  return state;
}

void WriteTrajectory(const std::filesystem::path& path,
                     std::span<const NetworkState> states) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  for (const auto& s : states) out << StateToJsonLine(s) << '\n';
  if (!out) throw Error("failed writing " + path.string());
}

std::vector<NetworkState> ReadTrajectory(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<NetworkState> states;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    states.push_back(StateFromJsonLine(line));
  }
  return states;
}

}  // namespace netstate
