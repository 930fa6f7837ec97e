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
#include "nerbias/labels.h"

#include <sstream>

#include "nerbias/errors.h"

namespace nerbias {

LabelMap LabelMap::Default() {
  LabelMap map;
  for (const char* raw : {"PER", "PERSON", "B-PER", "I-PER", "PERSON_NAME"}) {
    map.Set(raw, std::string(kPersonLabel));
  }
  for (const char* raw : {"LOC", "LOCATION", "GPE", "CITY"}) {
    map.Set(raw, std::string(kLocationLabel));
  }
  map.Set("MISC", std::string(kMiscLabel));
  map.Set("DATE", std::string(kDateLabel));
  return map;
}

LabelMap LabelMap::FromStream(std::istream& in, bool extend_default,
                              std::string_view source) {
  LabelMap map = extend_default ? Default() : LabelMap();
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string raw, canonical, extra;
    if (!(fields >> raw) || raw.front() == '#') continue;
    if (!(fields >> canonical) || (fields >> extra)) {
      throw ParseError(std::string(source), line_no,
                       "expected 'raw canonical' pair");
    }
    map.Set(std::move(raw), std::move(canonical));
  }
  return map;
}

void LabelMap::Set(std::string raw, std::string canonical) {
  entries_[std::move(raw)] = std::move(canonical);
}

std::string_view LabelMap::Normalize(std::string_view raw) const {
  auto it = entries_.find(raw);
  return it == entries_.end() ? kOtherLabel : std::string_view(it->second);
}

}  // namespace nerbias
