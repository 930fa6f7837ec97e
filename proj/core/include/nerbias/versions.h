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

// Version bias: how the error series of a tagger moves between releases.
//
// delta(key) = rate_new(key) - rate_old(key) on keys both series share.
// The per-gender "average increase" is the unweighted mean of the yearly
// deltas over the years where both genders have a delta, and the F/M ratio
// is only reported when both means are strictly positive.

#ifndef NERBIAS_VERSIONS_H_
#define NERBIAS_VERSIONS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "nerbias/scoring.h"

namespace nerbias {

struct DeltaSeries {
  std::map<SeriesKey, double> deltas;
  // Keys present in only one input; reported as a coverage warning.
  std::vector<SeriesKey> only_in_old;
  std::vector<SeriesKey> only_in_new;
};

// Deltas are computed from the exact fractions and rounded once. Throws
// DataError when both digests are set and differ, or when the key sets are
// disjoint.
DeltaSeries DiffRuns(const ErrorSeries& old_series,
                     const ErrorSeries& new_series);

enum class RatioStatus {
  kDefined,           // both means > 0
  kMaleMeanZero,      // denominator would be zero
  kSignMismatch,      // one gender improved while the other got worse
  kNotBothIncreasing, // both <= 0 (or female zero with male positive)
  kMissingGender,     // no common years between F and M
};

std::string_view RatioStatusName(RatioStatus status);

struct VersionReportRow {
  int template_id = 0;
  ErrorKind kind;
  std::optional<double> mean_female;
  std::optional<double> mean_male;
  std::size_t common_years = 0;
  std::optional<double> ratio;  // mean_female / mean_male
  RatioStatus status = RatioStatus::kMissingGender;
};

struct VersionReport {
  std::vector<VersionReportRow> rows;  // by (template, kind)
  std::size_t coverage_warnings = 0;
};

// Throws Error for an empty delta series.
VersionReport SummarizeVersionBias(const DeltaSeries& delta);

// Columns: template_id,error_type,weighting,mean_delta_female,
// mean_delta_male,common_years,ratio_female_male,status. Undefined cells
// are left empty. Leading '#' lines document the mean definition.
void WriteVersionReportCsv(std::ostream& out, const VersionReport& report);

// Human-readable summary that names every flagged (template, kind).
void WriteVersionSummary(std::ostream& out, const VersionReport& report);

// Per-key deltas, same key columns as the series CSV plus delta.
void WriteDeltaCsv(std::ostream& out, const DeltaSeries& delta);

}  // namespace nerbias

#endif  // NERBIAS_VERSIONS_H_
