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
#include "nerbias/scoring.h"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <tuple>
#include <utility>

#include <fmt/format.h>

#include "nerbias/errors.h"
#include "nerbias/utf8.h"

namespace nerbias {
namespace {

constexpr std::string_view kSeriesHeader =
    "year,gender,template_id,error_type,weighting,rate,num_names,total_freq";
constexpr std::string_view kDigestComment = "# benchmark_digest=";

std::vector<std::string_view> SplitCsv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) return fields;
    start = comma + 1;
  }
}

template <typename Int>
bool ParseUnsigned(std::string_view text, Int& out) {
  if (text.empty()) return false;
  std::string copy(text);
  char* end = nullptr;
  errno = 0;
  unsigned long long value = std::strtoull(copy.c_str(), &end, 10);
  if (errno != 0 || end != copy.c_str() + copy.size() || copy.front() == '-') {
    return false;
  }
  out = static_cast<Int>(value);
  return static_cast<unsigned long long>(out) == value;
}

bool ParseDouble(std::string_view text, double& out) {
  if (text.empty()) return false;
  std::string copy(text);
  char* end = nullptr;
  out = std::strtod(copy.c_str(), &end);
  return end == copy.c_str() + copy.size();
}

}  // namespace

NameOutcome NameOutcome::OtherTag(std::string label) {
  if (label.empty() || label == kPersonLabel) {
    throw Error(fmt::format("OtherTag needs a non-PERSON label, got '{}'", label));
  }
  return NameOutcome(State::kOtherTag, std::move(label));
}

std::string ToString(const NameOutcome& outcome) {
  switch (outcome.state()) {
    case NameOutcome::State::kPerson:
      return "PERSON";
    case NameOutcome::State::kOtherTag:
      return "TAGGED_AS_" + outcome.label();
    case NameOutcome::State::kUntagged:
      return "UNTAGGED";
  }
  return "?";
}

std::string_view ErrorTypeName(ErrorType type) {
  switch (type) {
    case ErrorType::kType1:
      return "Type1";
    case ErrorType::kType2:
      return "Type2";
    case ErrorType::kType3:
      return "Type3";
  }
  return "?";
}

std::string_view WeightingName(Weighting weighting) {
  return weighting == Weighting::kWeighted ? "Weighted" : "Unweighted";
}

ErrorType ParseErrorType(std::string_view text) {
  if (text == "Type1") return ErrorType::kType1;
  if (text == "Type2") return ErrorType::kType2;
  if (text == "Type3") return ErrorType::kType3;
  throw Error(fmt::format("unknown error type '{}'", text));
}

Weighting ParseWeighting(std::string_view text) {
  if (text == "Weighted") return Weighting::kWeighted;
  if (text == "Unweighted") return Weighting::kUnweighted;
  throw Error(fmt::format("unknown weighting '{}'", text));
}

std::string ErrorKindSlug(const ErrorKind& kind) {
  return fmt::format("type{}_{}", static_cast<int>(kind.type),
                     kind.weighting == Weighting::kWeighted ? "weighted"
                                                            : "unweighted");
}

ErrorKind ParseErrorKindSlug(std::string_view slug) {
  for (const ErrorKind& kind : kAllErrorKinds) {
    if (ErrorKindSlug(kind) == slug) return kind;
  }
  throw Error(fmt::format("unknown error kind '{}' (e.g. type1_weighted)", slug));
}

bool IsError(const NameOutcome& outcome, ErrorType type) {
  switch (type) {
    case ErrorType::kType1:
      return !outcome.is_person();
    case ErrorType::kType2:
      return outcome.is_other_tag();
    case ErrorType::kType3:
      return outcome.is_untagged();
  }
  return false;
}

bool operator==(const Rate& a, const Rate& b) {
  using Wide = unsigned __int128;
  return static_cast<Wide>(a.numerator) * b.denominator ==
         static_cast<Wide>(b.numerator) * a.denominator;
}

NameOutcome ClassifyOutcome(const BenchmarkItem& item, const TaggedItem& tagged,
                            const LabelMap& labels) {
  if (tagged.item_id != item.item_id) {
    throw DataError(fmt::format("tagged id {} does not match item {}",
                                tagged.item_id, item.item_id));
  }
  std::size_t length = utf8::Length(item.text);
  const EntitySpan* chosen = nullptr;
  for (const EntitySpan& e : tagged.entities) {
    if (e.span.end <= e.span.start || e.span.end > length) {
      throw DataError(fmt::format("span [{}, {}) outside text of {} ({} chars)",
                                  e.span.start, e.span.end, item.item_id, length));
    }
  }
  for (const EntitySpan& e : tagged.entities) {
    if (!e.span.Overlaps(item.name_span)) continue;
    if (labels.IsPerson(e.raw_label)) return NameOutcome::Person();
    if (chosen == nullptr || e.span.start < chosen->span.start ||
        (e.span.start == chosen->span.start &&
         (e.span.end > chosen->span.end ||
          (e.span.end == chosen->span.end && e.raw_label < chosen->raw_label)))) {
      chosen = &e;
    }
  }
  if (chosen == nullptr) return NameOutcome::Untagged();
  return NameOutcome::OtherTag(std::string(labels.Normalize(chosen->raw_label)));
}

Rate ComputeErrorRate(const OutcomeMap& outcomes, ErrorKind kind) {
  if (outcomes.empty()) throw Error("cannot compute an error rate over no names");
  Rate rate{0, 0};
  for (const auto& [name, scored] : outcomes) {
    if (scored.freq == 0) {
      throw Error(fmt::format("name {} has zero frequency", name));
    }
    std::uint64_t weight = kind.weighting == Weighting::kWeighted ? scored.freq : 1;
    rate.denominator += weight;
    if (IsError(scored.outcome, kind.type)) rate.numerator += weight;
  }
  return rate;
}

void WriteSeriesCsv(std::ostream& out, const ErrorSeries& series) {
  if (!series.benchmark_digest.empty()) {
    out << kDigestComment << series.benchmark_digest << '\n';
  }
  out << kSeriesHeader << '\n';
  for (const auto& [key, entry] : series.entries) {
    out << fmt::format("{},{},{},{},{},{},{},{}\n", key.year,
                       GenderCode(key.gender), key.template_id,
                       ErrorTypeName(key.kind.type),
                       WeightingName(key.kind.weighting), entry.rate.value(),
                       entry.num_names, entry.total_freq);
  }
}

ErrorSeries ReadSeriesCsv(std::istream& in, std::string_view source) {
  ErrorSeries series;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fail = [&](const std::string& what) {
      throw ParseError(std::string(source), line_no, what);
    };
    if (line.front() == '#') {
      if (line.starts_with(kDigestComment)) {
        series.benchmark_digest = line.substr(kDigestComment.size());
      }
      continue;
    }
    if (!header_seen) {
      if (line != kSeriesHeader) fail(fmt::format("expected header '{}'", kSeriesHeader));
      header_seen = true;
      continue;
    }
    auto fields = SplitCsv(line);
    if (fields.size() != 8) fail(fmt::format("expected 8 columns, got {}", fields.size()));
    SeriesKey key;
    SeriesEntry entry;
    double rate = 0;
    try {
      if (!ParseUnsigned(fields[0], key.year)) fail("bad year");
      key.gender = ParseGender(fields[1]);
      if (!ParseUnsigned(fields[2], key.template_id)) fail("bad template_id");
      key.kind = {ParseErrorType(fields[3]), ParseWeighting(fields[4])};
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(e.what());
    }
    if (!ParseDouble(fields[5], rate) || !(rate >= 0.0 && rate <= 1.0)) {
      fail(fmt::format("rate '{}' is not a number in [0, 1]", fields[5]));
    }
    if (!ParseUnsigned(fields[6], entry.num_names) || entry.num_names == 0) {
      fail("num_names must be a positive integer");
    }
    if (!ParseUnsigned(fields[7], entry.total_freq) || entry.total_freq == 0) {
      fail("total_freq must be a positive integer");
    }
    std::uint64_t denominator =
        key.kind.weighting == Weighting::kWeighted ? entry.total_freq : entry.num_names;
    entry.rate = Rate{static_cast<std::uint64_t>(std::llround(rate * denominator)),
                      denominator};
    if (entry.rate.value() != rate) {
      fail(fmt::format("rate {} is not a fraction over {}", fields[5], denominator));
    }
    if (!series.entries.emplace(key, entry).second) fail("duplicate row");
  }
  if (!header_seen) throw ParseError(std::string(source), 0, "missing header");
  return series;
}

RunScorer::RunScorer(const RunResult& run, const CensusIndex& index,
                     const LabelMap& labels, ScoreOptions options)
    : run_(run), index_(index), labels_(labels), options_(options) {}

void RunScorer::Add(const BenchmarkItem& item) {
  std::pair<int, Gender> group{item.year, item.gender};
  if (group_ != group) {
    if (group_) FlushGroup();
    if (finished_groups_.contains(group)) {
      throw DataError(fmt::format(
          "benchmark items for {} {} are not contiguous", item.year,
          GenderCode(item.gender)));
    }
    group_ = group;
  }

  auto freq = index_.Frequency(item.year, item.gender, item.name);
  if (!freq) {
    throw DataError(fmt::format("{} {} {} is not in the census", item.year,
                                GenderCode(item.gender), item.name));
  }

  auto tagged = run_.tagged.find(item.item_id);
  if (tagged == run_.tagged.end()) {
    auto failed = run_.failures.find(item.item_id);
    if (failed == run_.failures.end()) {
      missing_.push_back(item.item_id);
      return;
    }
    seen_ids_.insert(failed->first);
    if (!options_.skip_failures) {
      failed_.push_back(item.item_id);
    }
    return;
  }
  seen_ids_.insert(tagged->first);

  OutcomeMap& outcomes = pending_[item.template_id];
  bool inserted =
      outcomes
          .emplace(item.name,
                   ScoredName{ClassifyOutcome(item, tagged->second, labels_), *freq})
          .second;
  if (!inserted) {
    throw DataError(fmt::format("duplicate benchmark item {}", item.item_id));
  }
}

void RunScorer::FlushGroup() {
  if (!group_) return;
  auto [year, gender] = *group_;
  for (const auto& [template_id, outcomes] : pending_) {
    if (outcomes.empty()) continue;
    for (const ErrorKind& kind : kAllErrorKinds) {
      SeriesEntry entry;
      entry.rate = ComputeErrorRate(outcomes, kind);
      entry.num_names = outcomes.size();
      entry.total_freq = 0;
      for (const auto& [name, scored] : outcomes) entry.total_freq += scored.freq;
      series_.entries.emplace(SeriesKey{year, gender, template_id, kind}, entry);
    }
  }
  pending_.clear();
  finished_groups_.insert(*group_);
  group_.reset();
}

ErrorSeries RunScorer::Finish() {
  FlushGroup();
  if (!missing_.empty()) {
    throw DataError(fmt::format("{} benchmark item(s) missing from the run: {}",
                                missing_.size(), JoinIds(missing_)));
  }
  if (!failed_.empty()) {
    throw DataError(fmt::format(
        "{} item(s) failed in the run (score with skip-failures to exclude "
        "them): {}",
        failed_.size(), JoinIds(failed_)));
  }
  std::vector<std::string> extra;
  for (const auto& [id, tagged] : run_.tagged) {
    if (!seen_ids_.contains(id)) extra.push_back(id);
  }
  for (const auto& [id, reason] : run_.failures) {
    if (!seen_ids_.contains(id)) extra.push_back(id);
  }
  if (!extra.empty()) {
    std::sort(extra.begin(), extra.end());
    throw DataError(fmt::format("{} run id(s) are not part of the benchmark: {}",
                                extra.size(), JoinIds(extra)));
  }
  return std::move(series_);
}

namespace {

std::string SeriesDigest(const RunResult& run, const LabelMap& labels,
                         const BenchmarkConfig* config) {
  if (config != nullptr) {
    if (run.manifest &&
        BenchmarkDigest(*config, run.manifest->labels) != run.manifest->benchmark_digest) {
      throw DataError("run manifest was produced for a different benchmark "
                      "configuration");
    }
    return BenchmarkDigest(*config, labels);
  }
  if (!run.manifest) return {};
  return BenchmarkDigest(run.manifest->config, labels);
}

}  // namespace

ErrorSeries ScoreRun(const RunResult& run, std::span<const BenchmarkItem> items,
                     const CensusIndex& index, const LabelMap& labels,
                     ScoreOptions options) {
  std::vector<const BenchmarkItem*> ordered;
  ordered.reserve(items.size());
  for (const BenchmarkItem& item : items) ordered.push_back(&item);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const BenchmarkItem* a, const BenchmarkItem* b) {
                     return std::tie(a->year, a->gender) < std::tie(b->year, b->gender);
                   });
  RunScorer scorer(run, index, labels, options);
  for (const BenchmarkItem* item : ordered) scorer.Add(*item);
  ErrorSeries series = scorer.Finish();
  series.benchmark_digest = SeriesDigest(run, labels, nullptr);
  return series;
}

ErrorSeries ScoreRun(const RunResult& run, const BenchmarkConfig& config,
                     const CensusIndex& index, const LabelMap& labels,
                     ScoreOptions options) {
  std::string digest = SeriesDigest(run, labels, &config);
  RunScorer scorer(run, index, labels, options);
  ForEachItem(index, config, [&](const BenchmarkItem& item) { scorer.Add(item); });
  ErrorSeries series = scorer.Finish();
  series.benchmark_digest = std::move(digest);
  return series;
}

}  // namespace nerbias
