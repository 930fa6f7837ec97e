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

// Plot-ready tables and text summaries derived from an error series.

#ifndef NERBIAS_REPORT_H_
#define NERBIAS_REPORT_H_

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "nerbias/scoring.h"

namespace nerbias {

struct PlotSelection {
  std::vector<Gender> genders = {Gender::kFemale, Gender::kMale};
  int template_id = 4;
  ErrorKind kind;
};

// gender -> "year,rate" CSV text ordered by year. Throws Error when the
// selection is empty or matches no rows.
std::map<Gender, std::string> EmitPlotSeries(const ErrorSeries& series,
                                             const PlotSelection& selection);

// Distinct template ids present in the series.
std::vector<int> SeriesTemplates(const ErrorSeries& series);

// Per (template, kind): mean F and M rates over common years, the gap, and
// how many years the female rate exceeds the male rate.
void WriteGenderGapSummary(std::ostream& out, const ErrorSeries& series);

}  // namespace nerbias

#endif  // NERBIAS_REPORT_H_
