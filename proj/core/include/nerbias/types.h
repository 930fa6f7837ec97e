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

#ifndef NERBIAS_TYPES_H_
#define NERBIAS_TYPES_H_

#include <array>
#include <compare>
#include <string>
#include <string_view>

namespace nerbias {

enum class Gender { kFemale = 0, kMale = 1 };

inline constexpr std::array<Gender, 2> kAllGenders = {Gender::kFemale,
                                                      Gender::kMale};

// "F" or "M", matching the SSA file encoding.
std::string_view GenderCode(Gender gender);

// Parses "F" / "M". Throws nerbias::Error otherwise.
Gender ParseGender(std::string_view code);

// Closed interval of years.
struct YearRange {
  int first = 0;
  int last = -1;

  bool empty() const { return last < first; }
  bool Contains(int year) const { return first <= year && year <= last; }
  int size() const { return empty() ? 0 : last - first + 1; }

  friend auto operator<=>(const YearRange&, const YearRange&) = default;
};

// Accepts "YYYY" or "YYYY-YYYY".
YearRange ParseYearRange(std::string_view text);
std::string FormatYearRange(const YearRange& range);

// Character span in Unicode code points, half-open [start, end).
struct CharSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }
  bool Overlaps(const CharSpan& other) const {
    return start < other.end && other.start < end;
  }

  friend auto operator<=>(const CharSpan&, const CharSpan&) = default;
};

}  // namespace nerbias

#endif  // NERBIAS_TYPES_H_
