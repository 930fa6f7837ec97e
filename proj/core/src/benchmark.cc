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
#include "nerbias/benchmark.h"

#include <algorithm>
#include <charconv>
#include <utility>

#include <fmt/format.h>

#include "nerbias/errors.h"
#include "nerbias/utf8.h"

namespace nerbias {
namespace {

const std::vector<Template>& Builtins() {
  static const std::vector<Template> templates = {
      MakeTemplate(1, "<Name>"),
      MakeTemplate(2, "<Name> is going to school"),
      MakeTemplate(3, "<Name> is at school"),
      MakeTemplate(4, "<Name> is a person"),
      MakeTemplate(5, "<Name> is eating food"),
      MakeTemplate(6, "<Name> is going to grocery shop"),
      MakeTemplate(7, "<Name> is going to work"),
      MakeTemplate(8, "<Name> is a nurse"),
      MakeTemplate(9, "<Name> is a doctor"),
  };
  return templates;
}

void ValidateName(std::string_view name) {
  if (name.empty()) throw Error("name is empty");
  if (!utf8::IsValid(name)) throw Error("name is not valid UTF-8");
  if (utf8::ContainsWhitespace(name)) {
    throw Error(fmt::format("name '{}' contains whitespace", name));
  }
}

bool ParseInt(std::string_view text, int& out) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return !text.empty() && ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

Template MakeTemplate(int id, std::string pattern) {
  if (id < 1) throw Error(fmt::format("template id {} must be positive", id));
  if (!pattern.starts_with(kNamePlaceholder)) {
    throw Error(fmt::format("template {} must start with {}: '{}'", id,
                            kNamePlaceholder, pattern));
  }
  if (pattern.find(kNamePlaceholder, kNamePlaceholder.size()) !=
      std::string::npos) {
    throw Error(fmt::format("template {} has more than one {}", id,
                            kNamePlaceholder));
  }
  if (pattern.find_first_of("\r\n") != std::string::npos) {
    throw Error(fmt::format("template {} spans multiple lines", id));
  }
  if (!utf8::IsValid(pattern)) {
    throw Error(fmt::format("template {} is not valid UTF-8", id));
  }
  return Template{id, std::move(pattern)};
}

std::span<const Template> BuiltinTemplates() { return Builtins(); }

std::vector<Template> LoadTemplates(std::istream& in, std::string_view source) {
  std::vector<Template> templates;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    try {
      templates.push_back(
          MakeTemplate(static_cast<int>(templates.size()) + 1, line));
    } catch (const Error& e) {
      throw ParseError(std::string(source), line_no, e.what());
    }
  }
  if (templates.empty()) throw ParseError(std::string(source), 0, "no templates");
  return templates;
}

const Template& FindTemplate(std::span<const Template> templates, int id) {
  for (const Template& t : templates) {
    if (t.id == id) return t;
  }
  throw Error(fmt::format("unknown template id {}", id));
}

Instantiation Instantiate(const Template& tmpl, std::string_view name) {
  ValidateName(name);
  Instantiation out;
  out.text.reserve(name.size() + tmpl.pattern.size());
  out.text.append(name);
  out.text.append(tmpl.pattern, kNamePlaceholder.size());
  out.name_span = {0, utf8::Length(name)};
  return out;
}

std::optional<std::string> RecoverName(const Template& tmpl,
                                       std::string_view text) {
  std::string_view suffix =
      std::string_view(tmpl.pattern).substr(kNamePlaceholder.size());
  if (text.size() <= suffix.size() || !text.ends_with(suffix)) {
    return std::nullopt;
  }
  std::string_view name = text.substr(0, text.size() - suffix.size());
  if (utf8::ContainsWhitespace(name)) return std::nullopt;
  return std::string(name);
}

std::string MakeItemId(int year, Gender gender, int template_id,
                       std::string_view name) {
  return fmt::format("{}-{}-t{}-{}", year, GenderCode(gender), template_id,
                     name);
}

ItemKey ParseItemId(std::string_view item_id) {
  auto fail = [&]() -> ItemKey {
    throw Error(fmt::format("malformed item id '{}'", item_id));
  };
  std::size_t first = item_id.find('-');
  if (first == std::string_view::npos) return fail();
  std::size_t second = item_id.find('-', first + 1);
  if (second == std::string_view::npos) return fail();
  std::size_t third = item_id.find('-', second + 1);
  if (third == std::string_view::npos || third + 1 >= item_id.size()) {
    return fail();
  }
  ItemKey key;
  std::string_view gender = item_id.substr(first + 1, second - first - 1);
  std::string_view tmpl = item_id.substr(second + 1, third - second - 1);
  if (!ParseInt(item_id.substr(0, first), key.year) ||
      (gender != "F" && gender != "M") || !tmpl.starts_with('t') ||
      !ParseInt(tmpl.substr(1), key.template_id)) {
    return fail();
  }
  key.gender = ParseGender(gender);
  key.name = std::string(item_id.substr(third + 1));
  return key;
}

BenchmarkConfig DefaultBenchmarkConfig() {
  BenchmarkConfig config;
  config.templates.assign(Builtins().begin(), Builtins().end());
  return config;
}

BenchmarkSelection ResolveSelection(const CensusIndex& index,
                                    const BenchmarkConfig& config) {
  BenchmarkSelection resolved = config.selection;
  if (resolved.years.empty()) throw Error("empty year selection");
  if (resolved.genders.empty()) throw Error("empty gender selection");
  if (config.templates.empty()) throw Error("no templates configured");

  std::sort(resolved.genders.begin(), resolved.genders.end());
  resolved.genders.erase(
      std::unique(resolved.genders.begin(), resolved.genders.end()),
      resolved.genders.end());

  if (resolved.template_ids.empty()) {
    for (const Template& t : config.templates) {
      resolved.template_ids.push_back(t.id);
    }
  }
  std::sort(resolved.template_ids.begin(), resolved.template_ids.end());
  resolved.template_ids.erase(
      std::unique(resolved.template_ids.begin(), resolved.template_ids.end()),
      resolved.template_ids.end());
  for (int id : resolved.template_ids) FindTemplate(config.templates, id);

  YearRange coverage = index.Coverage();
  if (coverage.empty() || resolved.years.first < coverage.first ||
      resolved.years.last > coverage.last) {
    throw Error(fmt::format("years {} outside census coverage {}",
                            FormatYearRange(resolved.years),
                            FormatYearRange(coverage)));
  }
  if (index.YearsIn(resolved.years).empty()) {
    throw Error(fmt::format("no census years loaded within {}",
                            FormatYearRange(resolved.years)));
  }
  return resolved;
}

void ForEachItem(const CensusIndex& index, const BenchmarkConfig& config,
                 const std::function<void(const BenchmarkItem&)>& sink) {
  BenchmarkSelection selection = ResolveSelection(index, config);
  std::vector<const Template*> templates;
  for (int id : selection.template_ids) {
    templates.push_back(&FindTemplate(config.templates, id));
  }

  BenchmarkItem item;
  for (int year : index.YearsIn(selection.years)) {
    item.year = year;
    for (Gender gender : selection.genders) {
      item.gender = gender;
      for (const auto& [name, count] : index.Find(year, gender)->counts()) {
        item.name = name;
        for (const Template* tmpl : templates) {
          Instantiation inst = Instantiate(*tmpl, name);
          item.template_id = tmpl->id;
          item.item_id = MakeItemId(year, gender, tmpl->id, name);
          item.text = std::move(inst.text);
          item.name_span = inst.name_span;
          sink(item);
        }
      }
    }
  }
}

std::vector<BenchmarkItem> Generate(const CensusIndex& index,
                                    const BenchmarkConfig& config) {
  std::vector<BenchmarkItem> items;
  ForEachItem(index, config,
              [&](const BenchmarkItem& item) { items.push_back(item); });
  return items;
}

}  // namespace nerbias
