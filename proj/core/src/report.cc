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
#include "nerbias/report.h"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "nerbias/errors.h"

namespace nerbias {

std::map<Gender, std::string> EmitPlotSeries(const ErrorSeries& series,
                                             const PlotSelection& selection) {
  if (selection.genders.empty()) throw Error("plot selection names no gender");
  std::map<Gender, std::string> tables;
  for (Gender gender : selection.genders) {
    std::string table = "year,rate\n";
    std::size_t rows = 0;
    // Keys sort by year first, so rows come out in year order.
    for (const auto& [key, entry] : series.entries) {
      if (key.gender == gender && key.template_id == selection.template_id &&
          key.kind == selection.kind) {
        table += fmt::format("{},{}\n", key.year, entry.rate.value());
        ++rows;
      }
    }
    if (rows > 0) tables.emplace(gender, std::move(table));
  }
  if (tables.empty()) {
    throw Error(fmt::format("no rows for template {} {}", selection.template_id,
                            ErrorKindSlug(selection.kind)));
  }
  return tables;
}

std::vector<int> SeriesTemplates(const ErrorSeries& series) {
  std::set<int> ids;
  for (const auto& [key, entry] : series.entries) ids.insert(key.template_id);
  return {ids.begin(), ids.end()};
}

void WriteGenderGapSummary(std::ostream& out, const ErrorSeries& series) {
  out << "Gender gap summary (mean rate over years scored for both genders)\n";
  out << fmt::format("{:<10} {:<18} {:>10} {:>10} {:>10} {:>12}\n", "template",
                     "kind", "female", "male", "gap(F-M)", "years F>M");
  for (int template_id : SeriesTemplates(series)) {
    for (const ErrorKind& kind : kAllErrorKinds) {
      long double sum_f = 0, sum_m = 0;
      std::size_t years = 0, female_worse = 0;
      for (const auto& [key, entry] : series.entries) {
        if (key.template_id != template_id || key.kind != kind ||
            key.gender != Gender::kFemale) {
          continue;
        }
        auto male = series.entries.find(
            SeriesKey{key.year, Gender::kMale, template_id, kind});
        if (male == series.entries.end()) continue;
        double f = entry.rate.value();
        double m = male->second.rate.value();
        sum_f += f;
        sum_m += m;
        ++years;
        if (f > m) ++female_worse;
      }
      if (years == 0) continue;
      double mean_f = static_cast<double>(sum_f / years);
      double mean_m = static_cast<double>(sum_m / years);
      out << fmt::format("{:<10} {:<18} {:>10.6f} {:>10.6f} {:>+10.6f} {:>6}/{:<5}\n",
                         template_id, ErrorKindSlug(kind), mean_f, mean_m,
                         mean_f - mean_m, female_worse, years);
    }
  }
}

}  // namespace nerbias
