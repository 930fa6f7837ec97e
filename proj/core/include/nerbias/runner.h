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

// Drives blackbox taggers over the wire protocol, or loads their output
// from a results file.

#ifndef NERBIAS_RUNNER_H_
#define NERBIAS_RUNNER_H_

#include <chrono>
#include <cstddef>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nerbias/manifest.h"
#include "nerbias/protocol.h"

namespace nerbias {

struct RunResult {
  std::optional<RunManifest> manifest;
  std::map<std::string, TaggedItem, std::less<>> tagged;
  // id -> reason, only populated when failures were skipped.
  std::map<std::string, std::string, std::less<>> failures;

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

struct RunOptions {
  // Outstanding requests per adapter process.
  std::size_t in_flight = 32;
  // Number of adapter processes started from the same command.
  std::size_t processes = 1;
  // Maximum wait for a single response.
  std::chrono::milliseconds item_timeout{60000};
  // Record failed or timed-out items instead of aborting the run.
  bool skip_failures = false;
};

// Starts command via /bin/sh -c, feeds it the requests and collects one
// response per request. Responses are correlated by id, so arrival order is
// irrelevant. Throws AdapterError when the process exits early (listing the
// ids left unanswered), returns a duplicate or unknown id, or an item fails
// without skip_failures.
RunResult RunAdapter(const std::string& command,
                     std::span<const Request> requests,
                     const RunOptions& options,
                     std::optional<RunManifest> manifest = std::nullopt);

// Adapters may announce themselves with a {"adapter": {"name": ...,
// "version": ...}} line before their responses. Returns (name, version) for
// such a line, nullopt for anything else. RunAdapter uses it to fill an empty
// model name or version in the manifest.
std::optional<std::pair<std::string, std::string>> ParseAdapterInfo(
    std::string_view line);

// Manifest header record (when present) followed by one response line per
// item, sorted by id. Failed items are written as error responses.
void WriteRunResult(std::ostream& out, const RunResult& result);

// Reads a results file. A leading {"manifest": ...} record is optional.
// Throws ProtocolError for bad lines and DataError for duplicate ids.
RunResult LoadPretagged(std::istream& in, std::string_view source = "<stream>");

// Throws DataError naming ids absent from the result, or present but not
// expected. Failed items count as present.
void CheckCoverage(const RunResult& result,
                   std::span<const std::string> expected_ids);

}  // namespace nerbias

#endif  // NERBIAS_RUNNER_H_
