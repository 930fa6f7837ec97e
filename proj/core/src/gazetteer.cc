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
#include "nerbias/gazetteer.h"

#include <sstream>

#include "nerbias/errors.h"
#include "nerbias/utf8.h"

namespace nerbias {

Lexicon Lexicon::FromStream(std::istream& in, std::string_view source) {
  Lexicon lexicon;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string name, label, extra;
    if (!(fields >> name) || name.front() == '#') continue;
    if (!(fields >> label) || (fields >> extra)) {
      throw ParseError(std::string(source), line_no,
                       "expected 'name label' pair");
    }
    lexicon.Set(std::move(name), std::move(label));
  }
  return lexicon;
}

void Lexicon::Set(std::string name, std::string label) {
  entries_[std::move(name)] = std::move(label);
}

std::optional<std::string_view> Lexicon::Find(std::string_view name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::vector<EntitySpan> GazetteerTag(std::string_view text, CharSpan name_span,
                                     const Lexicon& lexicon) {
  auto label = lexicon.Find(utf8::Slice(text, name_span.start, name_span.end));
  if (!label) return {};
  return {EntitySpan{name_span, std::string(*label), {}}};
}

CharSpan LeadingTokenSpan(std::string_view text) {
  std::size_t length = utf8::Length(text);
  std::size_t end = 0;
  while (end < length &&
         !utf8::ContainsWhitespace(utf8::Slice(text, end, end + 1))) {
    ++end;
  }
  return {0, end};
}

TaggedItem GazetteerTagRequest(const Request& request, const Lexicon& lexicon) {
  TaggedItem tagged{request.id, {}};
  CharSpan name = LeadingTokenSpan(request.text);
  if (name.length() > 0) tagged.entities = GazetteerTag(request.text, name, lexicon);
  return tagged;
}

}  // namespace nerbias
