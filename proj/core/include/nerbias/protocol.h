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

// Adapter wire protocol. UTF-8, one JSON object per line.
//
//   request:  {"id": <string>, "text": <string>}
//   response: {"id": <string>, "entities": [{"start": <int>, "end": <int>,
//                                            "label": <string>}, ...]}
//
// Offsets are Unicode code-point offsets into "text", half-open. A response
// may carry {"id": ..., "error": <string>} instead of entities when the
// tagger failed on that item.

#ifndef NERBIAS_PROTOCOL_H_
#define NERBIAS_PROTOCOL_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nerbias/benchmark.h"
#include "nerbias/labels.h"
#include "nerbias/types.h"

namespace nerbias {

struct EntitySpan {
  CharSpan span;
  std::string raw_label;
  // Filled by ApplyLabelMap; empty straight off the wire.
  std::string normalized_label;

  friend bool operator==(const EntitySpan&, const EntitySpan&) = default;
};

struct TaggedItem {
  std::string item_id;
  std::vector<EntitySpan> entities;  // sorted by (start, end, raw label)

  friend bool operator==(const TaggedItem&, const TaggedItem&) = default;
};

struct Request {
  std::string id;
  std::string text;

  friend bool operator==(const Request&, const Request&) = default;
};

struct ResponseRecord {
  TaggedItem item;
  std::optional<std::string> error;
};

Request MakeRequest(const BenchmarkItem& item);

// Throws ProtocolError if text holds a newline or invalid UTF-8.
std::string EncodeRequest(const Request& request);
std::string EncodeRequest(const BenchmarkItem& item);
Request DecodeRequest(std::string_view line);

std::string EncodeResponse(const TaggedItem& tagged);
std::string EncodeErrorResponse(std::string_view id, std::string_view error);

// Throws ProtocolError naming the offending field for unparseable lines,
// a missing id, missing entities, or negative/inverted offsets.
ResponseRecord DecodeResponseRecord(std::string_view line);

// As DecodeResponseRecord, but an error response is itself a ProtocolError.
TaggedItem DecodeResponse(std::string_view line);

void ApplyLabelMap(TaggedItem& tagged, const LabelMap& labels);

}  // namespace nerbias

#endif  // NERBIAS_PROTOCOL_H_
