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

// Outcome classification and the six per-year, per-gender error rates.
//
// For the names N of one (year, gender, template) key with census
// frequencies freq(n):
//
//   Type1: outcome != PERSON          (tagged as something else, or not at all)
//   Type2: outcome is another label
//   Type3: outcome is untagged
//
//   unweighted = |{n : predicate}| / |N|
//   weighted   = sum freq(n) over predicate / sum freq(n) over N
//
// Rates are kept as exact integer fractions, so Type1 == Type2 + Type3
// holds exactly for both weightings.

#ifndef NERBIAS_SCORING_H_
#define NERBIAS_SCORING_H_

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "nerbias/benchmark.h"
#include "nerbias/census.h"
#include "nerbias/labels.h"
#include "nerbias/manifest.h"
#include "nerbias/protocol.h"
#include "nerbias/runner.h"

namespace nerbias {

class NameOutcome {
 public:
  enum class State { kPerson, kOtherTag, kUntagged };

  static NameOutcome Person() { return NameOutcome(State::kPerson, {}); }
  // label must be a canonical label other than PERSON.
  static NameOutcome OtherTag(std::string label);
  static NameOutcome Untagged() { return NameOutcome(State::kUntagged, {}); }

  State state() const { return state_; }
  // Canonical label for kOtherTag, empty otherwise.
  const std::string& label() const { return label_; }

  bool is_person() const { return state_ == State::kPerson; }
  bool is_other_tag() const { return state_ == State::kOtherTag; }
  bool is_untagged() const { return state_ == State::kUntagged; }

  friend bool operator==(const NameOutcome&, const NameOutcome&) = default;

 private:
  NameOutcome(State state, std::string label)
      : state_(state), label_(std::move(label)) {}

  State state_;
  std::string label_;
};

std::string ToString(const NameOutcome& outcome);

enum class ErrorType { kType1 = 1, kType2 = 2, kType3 = 3 };
enum class Weighting { kUnweighted, kWeighted };

struct ErrorKind {
  ErrorType type = ErrorType::kType1;
  Weighting weighting = Weighting::kUnweighted;

  friend auto operator<=>(const ErrorKind&, const ErrorKind&) = default;
};

inline constexpr std::array<ErrorKind, 6> kAllErrorKinds = {{
    {ErrorType::kType1, Weighting::kUnweighted},
    {ErrorType::kType1, Weighting::kWeighted},
    {ErrorType::kType2, Weighting::kUnweighted},
    {ErrorType::kType2, Weighting::kWeighted},
    {ErrorType::kType3, Weighting::kUnweighted},
    {ErrorType::kType3, Weighting::kWeighted},
}};

// "Type1" / "Weighted" etc., as used in the CSV columns.
std::string_view ErrorTypeName(ErrorType type);
std::string_view WeightingName(Weighting weighting);
ErrorType ParseErrorType(std::string_view text);
Weighting ParseWeighting(std::string_view text);
// "type1_weighted" style tag for file names and CLI flags.
std::string ErrorKindSlug(const ErrorKind& kind);
ErrorKind ParseErrorKindSlug(std::string_view slug);

// Whether outcome counts as an error of the given type.
bool IsError(const NameOutcome& outcome, ErrorType type);

// Exact fraction with a positive denominator.
struct Rate {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  double value() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  // Cross-multiplied comparison, exact.
  friend bool operator==(const Rate& a, const Rate& b);
};

struct ScoredName {
  NameOutcome outcome;
  std::uint64_t freq = 0;
};

using OutcomeMap = std::map<std::string, ScoredName, std::less<>>;

// Person if any span normalizing to PERSON overlaps the name. Otherwise the
// label of the overlapping span with the smallest start (ties: the longest
// span). Untagged if nothing overlaps. Throws DataError when a span exceeds
// the text or the ids differ.
NameOutcome ClassifyOutcome(const BenchmarkItem& item, const TaggedItem& tagged,
                            const LabelMap& labels);

// Throws Error for an empty map or a zero frequency.
Rate ComputeErrorRate(const OutcomeMap& outcomes, ErrorKind kind);

struct SeriesKey {
  int year = 0;
  Gender gender = Gender::kFemale;
  int template_id = 0;
  ErrorKind kind;

  friend auto operator<=>(const SeriesKey&, const SeriesKey&) = default;
};

struct SeriesEntry {
  Rate rate;
  std::uint64_t num_names = 0;
  std::uint64_t total_freq = 0;

  friend bool operator==(const SeriesEntry&, const SeriesEntry&) = default;
};

struct ErrorSeries {
  std::map<SeriesKey, SeriesEntry> entries;
  // Benchmark digest of the run the series was scored from; may be empty.
  std::string benchmark_digest;

  friend bool operator==(const ErrorSeries&, const ErrorSeries&) = default;
};

// Columns: year,gender,template_id,error_type,weighting,rate,num_names,
// total_freq. A leading "# benchmark_digest=<hex>" comment carries the
// digest when known. Rows are in key order.
void WriteSeriesCsv(std::ostream& out, const ErrorSeries& series);

// Inverse of WriteSeriesCsv. The exact fraction is recovered from rate and
// the denominator column; a rate that no fraction with that denominator
// produces is a ParseError.
ErrorSeries ReadSeriesCsv(std::istream& in, std::string_view source = "<stream>");

struct ScoreOptions {
  // Leave items recorded as failed out of the name sets instead of erroring.
  bool skip_failures = false;
};

// Accumulates outcomes item by item. Items must arrive grouped by
// (year, gender), which ForEachItem guarantees; keys are finalized when the
// group changes so memory stays bounded by one census year.
class RunScorer {
 public:
  RunScorer(const RunResult& run, const CensusIndex& index,
            const LabelMap& labels, ScoreOptions options = {});

  void Add(const BenchmarkItem& item);
  // Throws DataError listing the benchmark items missing from the run.
  ErrorSeries Finish();

 private:
  void FlushGroup();

  const RunResult& run_;
  const CensusIndex& index_;
  const LabelMap& labels_;
  ScoreOptions options_;
  std::optional<std::pair<int, Gender>> group_;
  std::map<int, OutcomeMap> pending_;  // template id -> outcomes
  std::set<std::pair<int, Gender>> finished_groups_;
  std::vector<std::string> missing_;
  std::vector<std::string> failed_;
  std::unordered_set<std::string_view> seen_ids_;
  ErrorSeries series_;
};

// Scores every item of the benchmark. Throws DataError when the run lacks
// items (listing their ids) or holds ids outside the benchmark.
ErrorSeries ScoreRun(const RunResult& run, std::span<const BenchmarkItem> items,
                     const CensusIndex& index, const LabelMap& labels,
                     ScoreOptions options = {});

// Streams items from config instead of materializing them.
ErrorSeries ScoreRun(const RunResult& run, const BenchmarkConfig& config,
                     const CensusIndex& index, const LabelMap& labels,
                     ScoreOptions options = {});

}  // namespace nerbias

#endif  // NERBIAS_SCORING_H_
