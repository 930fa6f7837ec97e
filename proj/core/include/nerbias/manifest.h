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
#ifndef NERBIAS_MANIFEST_H_
#define NERBIAS_MANIFEST_H_

#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "nerbias/benchmark.h"
#include "nerbias/labels.h"

namespace nerbias {

std::string_view HarnessVersion();

// SHA-256 (hex) over a canonical encoding of the census selection, the
// templates and the label map. Two runs are comparable iff digests match.
std::string BenchmarkDigest(const BenchmarkConfig& config,
                            const LabelMap& labels);

struct RunManifest {
  std::string model_name;
  std::string model_version;
  std::string adapter_command;
  std::string benchmark_digest;
  std::string timestamp;  // ISO-8601 UTC
  std::string harness_version;
  BenchmarkConfig config;
  LabelMap labels;

  friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

// Fills version and digest from config and labels.
RunManifest MakeManifest(std::string model_name, std::string model_version,
                         std::string adapter_command, BenchmarkConfig config,
                         LabelMap labels, std::string timestamp);

// UTC timestamp. Honors SOURCE_DATE_EPOCH for reproducible outputs.
std::string CurrentTimestamp();

nlohmann::json ManifestToJson(const RunManifest& manifest);
// Throws ProtocolError on a malformed manifest or a digest that does not
// match its own config.
RunManifest ManifestFromJson(const nlohmann::json& json);

nlohmann::json ConfigToJson(const BenchmarkConfig& config);
BenchmarkConfig ConfigFromJson(const nlohmann::json& json);

}  // namespace nerbias

#endif  // NERBIAS_MANIFEST_H_
