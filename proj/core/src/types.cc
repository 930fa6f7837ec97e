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
#include "nerbias/types.h"

#include <charconv>

#include <fmt/format.h>

#include "nerbias/errors.h"

namespace nerbias {
namespace {

int ParseYear(std::string_view text, std::string_view whole) {
  int year = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), year);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(fmt::format("invalid year range '{}'", whole));
  }
  return year;
}

}  // namespace

std::string_view GenderCode(Gender gender) {
  return gender == Gender::kFemale ? "F" : "M";
}

Gender ParseGender(std::string_view code) {
  if (code == "F") return Gender::kFemale;
  if (code == "M") return Gender::kMale;
  throw Error(fmt::format("invalid gender '{}' (expected F or M)", code));
}

YearRange ParseYearRange(std::string_view text) {
  auto dash = text.find('-');
  if (dash == std::string_view::npos) {
    int year = ParseYear(text, text);
    return {year, year};
  }
  YearRange range{ParseYear(text.substr(0, dash), text),
                  ParseYear(text.substr(dash + 1), text)};
  if (range.empty()) throw Error(fmt::format("empty year range '{}'", text));
  return range;
}

std::string FormatYearRange(const YearRange& range) {
  if (range.first == range.last) return std::to_string(range.first);
  return fmt::format("{}-{}", range.first, range.last);
}

}  // namespace nerbias
