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

// Template benchmark: sentences that start with a census name.

#ifndef NERBIAS_BENCHMARK_H_
#define NERBIAS_BENCHMARK_H_

#include <functional>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nerbias/census.h"
#include "nerbias/types.h"

namespace nerbias {

inline constexpr std::string_view kNamePlaceholder = "<Name>";

struct Template {
  int id = 0;
  std::string pattern;

  friend bool operator==(const Template&, const Template&) = default;
};

// Validates and builds a template. The pattern must start with the
// placeholder and contain it exactly once, on a single line.
Template MakeTemplate(int id, std::string pattern);

// The nine frozen templates, ids 1..9. Template 1 is the bare name.
std::span<const Template> BuiltinTemplates();

// One pattern per line; ids are assigned 1..n in file order. Blank lines and
// lines starting with '#' are skipped.
std::vector<Template> LoadTemplates(std::istream& in,
                                    std::string_view source = "<stream>");

const Template& FindTemplate(std::span<const Template> templates, int id);

struct Instantiation {
  std::string text;
  CharSpan name_span;
};

// Substitutes name for the placeholder. Throws Error if name is empty or
// contains whitespace.
Instantiation Instantiate(const Template& tmpl, std::string_view name);

// Inverse of Instantiate: the name if text matches the pattern.
std::optional<std::string> RecoverName(const Template& tmpl,
                                       std::string_view text);

struct BenchmarkItem {
  std::string item_id;
  int year = 0;
  Gender gender = Gender::kFemale;
  std::string name;
  int template_id = 0;
  std::string text;
  CharSpan name_span;

  friend bool operator==(const BenchmarkItem&, const BenchmarkItem&) = default;
};

// "<year>-<F|M>-t<template>-<name>". Stable and invertible.
std::string MakeItemId(int year, Gender gender, int template_id,
                       std::string_view name);

struct ItemKey {
  int year = 0;
  Gender gender = Gender::kFemale;
  int template_id = 0;
  std::string name;

  friend bool operator==(const ItemKey&, const ItemKey&) = default;
};

// Throws Error for an id not produced by MakeItemId.
ItemKey ParseItemId(std::string_view item_id);

struct BenchmarkSelection {
  YearRange years = kCensusYears;
  std::vector<Gender> genders = {Gender::kFemale, Gender::kMale};
  std::vector<int> template_ids;  // empty means "every template"

  friend bool operator==(const BenchmarkSelection&,
                         const BenchmarkSelection&) = default;
};

// Templates plus the census slice they are applied to.
struct BenchmarkConfig {
  BenchmarkSelection selection;
  std::vector<Template> templates;

  friend bool operator==(const BenchmarkConfig&,
                         const BenchmarkConfig&) = default;
};

BenchmarkConfig DefaultBenchmarkConfig();

// Sorted, deduplicated copy of the selection with template_ids resolved.
// Throws Error when the selection is empty or references unknown
// templates, or when years fall outside the index coverage.
BenchmarkSelection ResolveSelection(const CensusIndex& index,
                                    const BenchmarkConfig& config);

// Emits one item per (year, gender, name, template) in that order: years
// ascending, F before M, names in byte order, template ids ascending.
void ForEachItem(const CensusIndex& index, const BenchmarkConfig& config,
                 const std::function<void(const BenchmarkItem&)>& sink);

std::vector<BenchmarkItem> Generate(const CensusIndex& index,
                                    const BenchmarkConfig& config);

}  // namespace nerbias

#endif  // NERBIAS_BENCHMARK_H_
