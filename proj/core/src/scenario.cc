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


#include "netstate/scenario.h"

#include <fstream>
#include <set>
#include <sstream>

#include "json_util.h"

namespace netstate {

using internal::DecimalFromJson;
using internal::Json;

void Scenario::Validate() const {
  if (data_centers.empty()) throw ConfigError("scenario declares no data centers");
  std::set<int> ids;
  for (const auto& dc : data_centers) {
    if (dc.dc_id <= 0) throw ConfigError("dc_id must be positive");
    if (!ids.insert(dc.dc_id).second) {
      throw ConfigError("duplicate dc_id " + std::to_string(dc.dc_id));
    }
    if (dc.total_storage_gb < Decimal() || dc.total_cpu_units < Decimal()) {
      throw ConfigError("DC " + std::to_string(dc.dc_id) + " has negative capacity");
    }
  }
  if (horizon < 0) throw ConfigError("horizon must be non-negative");
  for (const auto& req : vnf_requirements) {
    if (req.cpu_units < Decimal() || req.storage_gb < Decimal()) {
      throw ConfigError("VNF requirements must be non-negative");
    }
  }
  if (delays.processing_delay_ms < Decimal() || delays.hop_delay_ms < Decimal()) {
    throw ConfigError("delays must be non-negative");
  }
  if (hold_steps < 1) throw ConfigError("hold_steps must be at least 1");
  if (retain_finished_steps < 0) throw ConfigError("retain_finished_steps must be >= 0");
  if (bundles_per_step < 0) throw ConfigError("bundles_per_step must be >= 0");
}

Scenario Scenario::FromJson(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("scenario must be a JSON object");

  Scenario s;
  try {
    for (const auto& dc : j.at("data_centers")) {
      DataCenterSpec spec;
      spec.dc_id = dc.at("dc_id").get<int>();
      spec.total_storage_gb = DecimalFromJson(dc.at("storage_gb"), "storage_gb");
      spec.total_cpu_units = DecimalFromJson(dc.at("cpu_units"), "cpu_units");
      s.data_centers.push_back(spec);
    }
    if (j.contains("horizon")) s.horizon = j["horizon"].get<int>();
    if (j.contains("vnf_requirements")) {
      const Json& reqs = j["vnf_requirements"];
      VnfRequirement base;
      if (reqs.contains("cpu_units")) {
        base.cpu_units = DecimalFromJson(reqs["cpu_units"], "cpu_units");
      }
      if (reqs.contains("storage_gb")) {
        base.storage_gb = DecimalFromJson(reqs["storage_gb"], "storage_gb");
      }
      s.vnf_requirements.fill(base);
      if (reqs.contains("overrides")) {
        for (const auto& [name, o] : reqs["overrides"].items()) {
          auto& r = s.vnf_requirements[static_cast<size_t>(ParseVnfType(name))];
          if (o.contains("cpu_units")) r.cpu_units = DecimalFromJson(o["cpu_units"], "cpu_units");
          if (o.contains("storage_gb")) {
            r.storage_gb = DecimalFromJson(o["storage_gb"], "storage_gb");
          }
        }
      }
    }
    if (j.contains("processing_delay_ms")) {
      s.delays.processing_delay_ms =
          DecimalFromJson(j["processing_delay_ms"], "processing_delay_ms");
    }
    if (j.contains("hop_delay_ms")) {
      s.delays.hop_delay_ms = DecimalFromJson(j["hop_delay_ms"], "hop_delay_ms");
    }
    if (j.contains("hold_steps")) s.hold_steps = j["hold_steps"].get<int>();
    if (j.contains("retain_finished_steps")) {
      s.retain_finished_steps = j["retain_finished_steps"].get<int>();
    }
    if (j.contains("bundles_per_step")) s.bundles_per_step = j["bundles_per_step"].get<int>();
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("invalid scenario: ") + e.what());
  } catch (const UnknownNameError& e) {
    throw ConfigError(std::string("invalid scenario: ") + e.what());
  }
  s.Validate();
  return s;
}

Scenario Scenario::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open scenario " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return FromJson(buf.str());
}

}  // namespace netstate
