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
#include "nerbias/protocol.h"

#include <algorithm>
#include <tuple>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "nerbias/errors.h"
#include "nerbias/utf8.h"

namespace nerbias {
namespace {

using nlohmann::json;

std::string Dump(const json& j) {
  return j.dump(-1, ' ', false, json::error_handler_t::strict);
}

json ParseLine(std::string_view line) {
  json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ProtocolError("", "unparseable record");
  if (!j.is_object()) throw ProtocolError("", "record is not an object");
  return j;
}

std::string RequireString(const json& j, const char* field) {
  auto it = j.find(field);
  if (it == j.end()) throw ProtocolError(field, "missing");
  if (!it->is_string()) throw ProtocolError(field, "not a string");
  return it->get<std::string>();
}

std::size_t RequireOffset(const json& entity, const char* name,
                          const std::string& field) {
  auto it = entity.find(name);
  if (it == entity.end()) throw ProtocolError(field, "missing");
  if (it->is_number_unsigned()) return it->get<std::size_t>();
  if (it->is_number_integer()) throw ProtocolError(field, "negative offset");
  throw ProtocolError(field, "not an integer");
}

}  // namespace

Request MakeRequest(const BenchmarkItem& item) {
  return Request{item.item_id, item.text};
}

std::string EncodeRequest(const Request& request) {
  if (request.text.find_first_of("\r\n") != std::string::npos) {
    throw ProtocolError("text", "contains a line break");
  }
  if (!utf8::IsValid(request.id)) throw ProtocolError("id", "invalid UTF-8");
  if (!utf8::IsValid(request.text)) {
    throw ProtocolError("text", "invalid UTF-8");
  }
  return Dump(json{{"id", request.id}, {"text", request.text}});
}

std::string EncodeRequest(const BenchmarkItem& item) {
  return EncodeRequest(MakeRequest(item));
}

Request DecodeRequest(std::string_view line) {
  json j = ParseLine(line);
  return Request{RequireString(j, "id"), RequireString(j, "text")};
}

std::string EncodeResponse(const TaggedItem& tagged) {
  json entities = json::array();
  for (const EntitySpan& e : tagged.entities) {
    entities.push_back(
        {{"start", e.span.start}, {"end", e.span.end}, {"label", e.raw_label}});
  }
  return Dump(json{{"id", tagged.item_id}, {"entities", std::move(entities)}});
}

std::string EncodeErrorResponse(std::string_view id, std::string_view error) {
  return Dump(json{{"id", id}, {"error", error}});
}

ResponseRecord DecodeResponseRecord(std::string_view line) {
  json j = ParseLine(line);
  ResponseRecord record;
  record.item.item_id = RequireString(j, "id");
  if (j.contains("error")) {
    record.error = RequireString(j, "error");
    return record;
  }
  auto it = j.find("entities");
  if (it == j.end()) throw ProtocolError("entities", "missing");
  if (!it->is_array()) throw ProtocolError("entities", "not an array");
  for (std::size_t i = 0; i < it->size(); ++i) {
    const json& entity = (*it)[i];
    std::string field = fmt::format("entities[{}]", i);
    if (!entity.is_object()) throw ProtocolError(field, "not an object");
    EntitySpan span;
    span.span.start = RequireOffset(entity, "start", field + ".start");
    span.span.end = RequireOffset(entity, "end", field + ".end");
    if (span.span.end <= span.span.start) {
      throw ProtocolError(field + ".end",
                          fmt::format("inverted or empty span [{}, {})",
                                      span.span.start, span.span.end));
    }
    auto label = entity.find("label");
    if (label == entity.end()) throw ProtocolError(field + ".label", "missing");
    if (!label->is_string()) {
      throw ProtocolError(field + ".label", "not a string");
    }
    span.raw_label = label->get<std::string>();
    record.item.entities.push_back(std::move(span));
  }
  std::sort(record.item.entities.begin(), record.item.entities.end(),
            [](const EntitySpan& a, const EntitySpan& b) {
              return std::tie(a.span, a.raw_label) <
                     std::tie(b.span, b.raw_label);
            });
  return record;
}

TaggedItem DecodeResponse(std::string_view line) {
  ResponseRecord record = DecodeResponseRecord(line);
  if (record.error) {
    throw ProtocolError("error", fmt::format("adapter reported failure for {}: {}",
                                             record.item.item_id, *record.error));
  }
  return std::move(record.item);
}

void ApplyLabelMap(TaggedItem& tagged, const LabelMap& labels) {
  for (EntitySpan& e : tagged.entities) {
    e.normalized_label = std::string(labels.Normalize(e.raw_label));
  }
}

}  // namespace nerbias
