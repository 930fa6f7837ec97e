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

// Deterministic lexicon tagger. Stands in for a learned model in tests and
// in the bundled adapter binary.

#ifndef NERBIAS_GAZETTEER_H_
#define NERBIAS_GAZETTEER_H_

#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nerbias/protocol.h"
#include "nerbias/types.h"

namespace nerbias {

class Lexicon {
 public:
  using Map = std::map<std::string, std::string, std::less<>>;

  Lexicon() = default;
  explicit Lexicon(Map entries) : entries_(std::move(entries)) {}

  // "name<TAB>label" (or whitespace-separated) lines; '#' comments allowed.
  static Lexicon FromStream(std::istream& in,
                            std::string_view source = "<stream>");

  void Set(std::string name, std::string label);
  std::optional<std::string_view> Find(std::string_view name) const;
  const Map& entries() const { return entries_; }

 private:
  Map entries_;
};

// One span over name_span carrying the lexicon label, or nothing when the
// name is absent.
std::vector<EntitySpan> GazetteerTag(std::string_view text, CharSpan name_span,
                                     const Lexicon& lexicon);

// Span of the leading whitespace-delimited token of text.
CharSpan LeadingTokenSpan(std::string_view text);

// Tags a wire request, treating the leading token as the name.
TaggedItem GazetteerTagRequest(const Request& request, const Lexicon& lexicon);

}  // namespace nerbias

#endif  // NERBIAS_GAZETTEER_H_
