// Copyright 2026 The nerbias Authors.
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
#include "nerbias/manifest.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <ctime>

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "nerbias/errors.h"

#ifndef NERBIAS_VERSION
#define NERBIAS_VERSION "0.0.0"
#endif

namespace nerbias {
namespace {

using nlohmann::json;

std::string Sha256Hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &length, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::string hex;
  hex.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    hex += fmt::format("{:02x}", md[i]);
  }
  return hex;
}

// Canonical form: genders and template ids sorted and resolved.
BenchmarkConfig Canonical(BenchmarkConfig config) {
  auto& sel = config.selection;
  std::sort(sel.genders.begin(), sel.genders.end());
  sel.genders.erase(std::unique(sel.genders.begin(), sel.genders.end()),
                    sel.genders.end());
  if (sel.template_ids.empty()) {
    for (const Template& t : config.templates) sel.template_ids.push_back(t.id);
  }
  std::sort(sel.template_ids.begin(), sel.template_ids.end());
  sel.template_ids.erase(
      std::unique(sel.template_ids.begin(), sel.template_ids.end()),
      sel.template_ids.end());
  std::sort(config.templates.begin(), config.templates.end(),
            [](const Template& a, const Template& b) { return a.id < b.id; });
  return config;
}

json LabelsToJson(const LabelMap& labels) {
  json j = json::object();
  for (const auto& [raw, canonical] : labels.entries()) j[raw] = canonical;
  return j;
}

template <typename T>
T Field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw ProtocolError(fmt::format("manifest.{}", name), "missing");
  try {
    return it->get<T>();
  } catch (const json::exception& e) {
    throw ProtocolError(fmt::format("manifest.{}", name), e.what());
  }
}

}  // namespace

std::string_view HarnessVersion() { return NERBIAS_VERSION; }

json ConfigToJson(const BenchmarkConfig& config) {
  json genders = json::array();
  for (Gender g : config.selection.genders) genders.push_back(GenderCode(g));
  json templates = json::array();
  for (const Template& t : config.templates) {
    templates.push_back({{"id", t.id}, {"pattern", t.pattern}});
  }
  return json{{"years", {config.selection.years.first, config.selection.years.last}},
              {"genders", std::move(genders)},
              {"template_ids", config.selection.template_ids},
              {"templates", std::move(templates)}};
}

BenchmarkConfig ConfigFromJson(const json& j) {
  BenchmarkConfig config;
  try {
    auto years = j.at("years").get<std::vector<int>>();
    if (years.size() != 2) throw ProtocolError("config.years", "expected [first, last]");
    config.selection.years = {years[0], years[1]};
    config.selection.genders.clear();
    for (const auto& g : j.at("genders")) {
      config.selection.genders.push_back(ParseGender(g.get<std::string>()));
    }
    config.selection.template_ids = j.at("template_ids").get<std::vector<int>>();
    for (const auto& t : j.at("templates")) {
      config.templates.push_back(
          MakeTemplate(t.at("id").get<int>(), t.at("pattern").get<std::string>()));
    }
  } catch (const json::exception& e) {
    throw ProtocolError("config", e.what());
  } catch (const ProtocolError&) {
    throw;
  } catch (const Error& e) {
    throw ProtocolError("config", e.what());
  }
  return config;
}

std::string BenchmarkDigest(const BenchmarkConfig& config,
                            const LabelMap& labels) {
  json canonical{{"config", ConfigToJson(Canonical(config))},
                 {"labels", LabelsToJson(labels)}};
  return Sha256Hex(canonical.dump(-1, ' ', false, json::error_handler_t::strict));
}

RunManifest MakeManifest(std::string model_name, std::string model_version,
                         std::string adapter_command, BenchmarkConfig config,
                         LabelMap labels, std::string timestamp) {
  RunManifest manifest;
  manifest.model_name = std::move(model_name);
  manifest.model_version = std::move(model_version);
  manifest.adapter_command = std::move(adapter_command);
  manifest.config = Canonical(std::move(config));
  manifest.labels = std::move(labels);
  manifest.benchmark_digest = BenchmarkDigest(manifest.config, manifest.labels);
  manifest.timestamp = std::move(timestamp);
  manifest.harness_version = std::string(HarnessVersion());
  return manifest;
}

std::string CurrentTimestamp() {
  std::time_t seconds;
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch && *epoch) {
    seconds = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  } else {
    seconds = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  }
  std::tm tm{};
  gmtime_r(&seconds, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

json ManifestToJson(const RunManifest& manifest) {
  return json{{"model_name", manifest.model_name},
              {"model_version", manifest.model_version},
              {"adapter_command", manifest.adapter_command},
              {"benchmark_digest", manifest.benchmark_digest},
              {"timestamp", manifest.timestamp},
              {"harness_version", manifest.harness_version},
              {"config", ConfigToJson(manifest.config)},
              {"labels", LabelsToJson(manifest.labels)}};
}

RunManifest ManifestFromJson(const json& j) {
  if (!j.is_object()) throw ProtocolError("manifest", "not an object");
  RunManifest manifest;
  manifest.model_name = Field<std::string>(j, "model_name");
  manifest.model_version = Field<std::string>(j, "model_version");
  manifest.adapter_command = Field<std::string>(j, "adapter_command");
  manifest.benchmark_digest = Field<std::string>(j, "benchmark_digest");
  manifest.timestamp = Field<std::string>(j, "timestamp");
  manifest.harness_version = Field<std::string>(j, "harness_version");
  if (!j.contains("config")) throw ProtocolError("manifest.config", "missing");
  manifest.config = ConfigFromJson(j.at("config"));
  for (const auto& [raw, canonical] :
       Field<std::map<std::string, std::string>>(j, "labels")) {
    manifest.labels.Set(raw, canonical);
  }
  if (BenchmarkDigest(manifest.config, manifest.labels) !=
      manifest.benchmark_digest) {
    throw ProtocolError("manifest.benchmark_digest",
                        "does not match the recorded config and labels");
  }
  return manifest;
}

}  // namespace nerbias
