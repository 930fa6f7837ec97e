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
#ifndef NERBIAS_LABELS_H_
#define NERBIAS_LABELS_H_

#include <functional>
#include <istream>
#include <map>
#include <string>
#include <string_view>

namespace nerbias {

inline constexpr std::string_view kPersonLabel = "PERSON";
inline constexpr std::string_view kLocationLabel = "LOC";
inline constexpr std::string_view kMiscLabel = "MISC";
inline constexpr std::string_view kDateLabel = "DATE";
inline constexpr std::string_view kOtherLabel = "OTHER";

// Raw tagger label -> canonical label. Labels with no entry map to OTHER,
// so Normalize is total.
class LabelMap {
 public:
  using Map = std::map<std::string, std::string, std::less<>>;

  LabelMap() = default;

  // PER, PERSON, B-PER, I-PER, PERSON_NAME -> PERSON;
  // LOC, LOCATION, GPE, CITY -> LOC; MISC -> MISC; DATE -> DATE.
  static LabelMap Default();

  // Tab- or whitespace-separated "raw canonical" lines layered over the
  // defaults (or over an empty map when extend_default is false).
  static LabelMap FromStream(std::istream& in, bool extend_default = true,
                             std::string_view source = "<stream>");

  void Set(std::string raw, std::string canonical);
  std::string_view Normalize(std::string_view raw) const;
  bool IsPerson(std::string_view raw) const {
    return Normalize(raw) == kPersonLabel;
  }

  const Map& entries() const { return entries_; }

  friend bool operator==(const LabelMap&, const LabelMap&) = default;

 private:
  Map entries_;
};

}  // namespace nerbias

#endif  // NERBIAS_LABELS_H_
