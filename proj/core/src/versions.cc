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
#include "nerbias/versions.h"

#include <set>

#include <fmt/format.h>

#include "nerbias/errors.h"

namespace nerbias {
namespace {

// (new - old) from exact fractions, rounded once.
double ExactDelta(const Rate& old_rate, const Rate& new_rate) {
  using Wide = __int128;
  Wide numerator = static_cast<Wide>(new_rate.numerator) * old_rate.denominator -
                   static_cast<Wide>(old_rate.numerator) * new_rate.denominator;
  Wide denominator = static_cast<Wide>(new_rate.denominator) * old_rate.denominator;
  return static_cast<double>(static_cast<long double>(numerator) /
                             static_cast<long double>(denominator));
}

std::string Cell(const std::optional<double>& value) {
  return value ? fmt::format("{}", *value) : std::string();
}

std::string KeyLabel(int template_id, const ErrorKind& kind) {
  return fmt::format("template {} {} {}", template_id, ErrorTypeName(kind.type),
                     WeightingName(kind.weighting));
}

}  // namespace

std::string_view RatioStatusName(RatioStatus status) {
  switch (status) {
    case RatioStatus::kDefined:
      return "ok";
    case RatioStatus::kMaleMeanZero:
      return "male_mean_zero";
    case RatioStatus::kSignMismatch:
      return "sign_mismatch";
    case RatioStatus::kNotBothIncreasing:
      return "not_both_increasing";
    case RatioStatus::kMissingGender:
      return "missing_gender";
  }
  return "?";
}

DeltaSeries DiffRuns(const ErrorSeries& old_series,
                     const ErrorSeries& new_series) {
  if (!old_series.benchmark_digest.empty() &&
      !new_series.benchmark_digest.empty() &&
      old_series.benchmark_digest != new_series.benchmark_digest) {
    throw DataError(fmt::format(
        "series come from different benchmark configurations ({} vs {})",
        old_series.benchmark_digest, new_series.benchmark_digest));
  }
  DeltaSeries delta;
  for (const auto& [key, entry] : old_series.entries) {
    auto it = new_series.entries.find(key);
    if (it == new_series.entries.end()) {
      delta.only_in_old.push_back(key);
    } else {
      delta.deltas.emplace(key, ExactDelta(entry.rate, it->second.rate));
    }
  }
  for (const auto& [key, entry] : new_series.entries) {
    if (!old_series.entries.contains(key)) delta.only_in_new.push_back(key);
  }
  if (delta.deltas.empty()) {
    throw DataError("the two series share no (year, gender, template, kind) key");
  }
  return delta;
}

VersionReport SummarizeVersionBias(const DeltaSeries& delta) {
  if (delta.deltas.empty()) throw Error("empty delta series");

  // (template, kind) -> gender -> year -> delta
  std::map<std::pair<int, ErrorKind>, std::array<std::map<int, double>, 2>> grouped;
  for (const auto& [key, value] : delta.deltas) {
    grouped[{key.template_id, key.kind}][static_cast<int>(key.gender)][key.year] =
        value;
  }

  VersionReport report;
  report.coverage_warnings = delta.only_in_old.size() + delta.only_in_new.size();
  for (const auto& [group, by_gender] : grouped) {
    const auto& female = by_gender[static_cast<int>(Gender::kFemale)];
    const auto& male = by_gender[static_cast<int>(Gender::kMale)];
    VersionReportRow row;
    row.template_id = group.first;
    row.kind = group.second;

    long double sum_f = 0, sum_m = 0;
    for (const auto& [year, value] : female) {
      auto it = male.find(year);
      if (it == male.end()) continue;
      sum_f += value;
      sum_m += it->second;
      ++row.common_years;
    }
    if (row.common_years == 0) {
      auto mean = [](const std::map<int, double>& values) -> std::optional<double> {
        if (values.empty()) return std::nullopt;
        long double sum = 0;
        for (const auto& [year, value] : values) sum += value;
        return static_cast<double>(sum / values.size());
      };
      row.mean_female = mean(female);
      row.mean_male = mean(male);
      row.status = RatioStatus::kMissingGender;
      report.rows.push_back(row);
      continue;
    }
    double mf = static_cast<double>(sum_f / row.common_years);
    double mm = static_cast<double>(sum_m / row.common_years);
    row.mean_female = mf;
    row.mean_male = mm;
    if (mf > 0 && mm > 0) {
      row.status = RatioStatus::kDefined;
      row.ratio = mf / mm;
    } else if (mm == 0) {
      row.status = RatioStatus::kMaleMeanZero;
    } else if ((mf > 0 && mm < 0) || (mf < 0 && mm > 0)) {
      row.status = RatioStatus::kSignMismatch;
    } else {
      row.status = RatioStatus::kNotBothIncreasing;
    }
    report.rows.push_back(row);
  }
  return report;
}

void WriteVersionReportCsv(std::ostream& out, const VersionReport& report) {
  out << "# mean_delta = unweighted mean over years (common to F and M) of "
         "rate_new - rate_old\n"
         "# ratio_female_male is reported only when both means are > 0\n"
         "template_id,error_type,weighting,mean_delta_female,mean_delta_male,"
         "common_years,ratio_female_male,status\n";
  for (const VersionReportRow& row : report.rows) {
    out << fmt::format("{},{},{},{},{},{},{},{}\n", row.template_id,
                       ErrorTypeName(row.kind.type), WeightingName(row.kind.weighting),
                       Cell(row.mean_female), Cell(row.mean_male), row.common_years,
                       Cell(row.ratio), RatioStatusName(row.status));
  }
}

void WriteVersionSummary(std::ostream& out, const VersionReport& report) {
  out << "Version bias summary\n"
         "mean delta = unweighted mean over common years of (new rate - old rate)\n\n";
  std::size_t flagged = 0;
  for (const VersionReportRow& row : report.rows) {
    std::string label = KeyLabel(row.template_id, row.kind);
    switch (row.status) {
      case RatioStatus::kDefined:
        out << fmt::format("{}: female +{:.6f}, male +{:.6f}, female/male = {:.3f}\n",
                           label, *row.mean_female, *row.mean_male, *row.ratio);
        break;
      case RatioStatus::kMissingGender:
        ++flagged;
        out << fmt::format("{}: FLAG {} (no year with both genders)\n", label,
                           RatioStatusName(row.status));
        break;
      default:
        ++flagged;
        out << fmt::format("{}: FLAG {} (female {:+.6f}, male {:+.6f}); no ratio\n",
                           label, RatioStatusName(row.status), *row.mean_female,
                           *row.mean_male);
        break;
    }
  }
  out << fmt::format("\n{} of {} (template, kind) pairs flagged", flagged,
                     report.rows.size());
  if (report.coverage_warnings > 0) {
    out << fmt::format("; {} key(s) present in only one series were ignored",
                       report.coverage_warnings);
  }
  out << '\n';
}

void WriteDeltaCsv(std::ostream& out, const DeltaSeries& delta) {
  out << "year,gender,template_id,error_type,weighting,delta\n";
  for (const auto& [key, value] : delta.deltas) {
    out << fmt::format("{},{},{},{},{},{}\n", key.year, GenderCode(key.gender),
                       key.template_id, ErrorTypeName(key.kind.type),
                       WeightingName(key.kind.weighting), value);
  }
}

}  // namespace nerbias
