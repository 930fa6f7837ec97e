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

// Gender representation of census names in CoNLL-style training corpora.

#ifndef NERBIAS_CORPUS_AUDIT_H_
#define NERBIAS_CORPUS_AUDIT_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nerbias/census.h"
#include "nerbias/labels.h"

namespace nerbias {

enum class TagScheme { kIob1, kIob2, kBilou };

TagScheme ParseTagScheme(std::string_view text);
std::string_view TagSchemeName(TagScheme scheme);

struct ConllConfig {
  // 0-based column holding the NER tag (3 for CoNLL-2003).
  std::size_t tag_column = 3;
  TagScheme scheme = TagScheme::kIob1;
};

struct CorpusToken {
  std::string surface;
  std::string ner_tag;
  std::size_t document = 0;
  std::size_t sentence = 0;  // running sentence index over the file
  std::size_t position = 0;  // token index within its sentence

  friend bool operator==(const CorpusToken&, const CorpusToken&) = default;
};

// Streams tokens in document order. Blank lines end sentences and
// -DOCSTART- lines start a new document. Throws ParseError on a line with
// fewer columns than tag_column + 1.
void ParseConll(std::istream& in, const ConllConfig& config,
                const std::function<void(const CorpusToken&)>& sink,
                std::string_view source = "<stream>");

std::vector<CorpusToken> ParseConll(std::istream& in, const ConllConfig& config,
                                    std::string_view source = "<stream>");

// Whether a tag marks a PERSON token under the scheme (prefix stripped,
// entity type normalized through labels). Throws DataError for a prefix the
// scheme does not allow.
bool IsPersonTag(std::string_view tag, TagScheme scheme, const LabelMap& labels);

enum class MatchMode { kAnyToken, kPersonTagged };

MatchMode ParseMatchMode(std::string_view text);
std::string_view MatchModeName(MatchMode mode);

struct AuditOptions {
  MatchMode mode = MatchMode::kAnyToken;
  bool case_insensitive = false;
  // Assign a unisex name only to the gender with more total births.
  bool exclusive_gender = false;
  TagScheme scheme = TagScheme::kIob1;
  LabelMap labels = LabelMap::Default();
  YearRange years = kCensusYears;
};

struct CorpusSplit {
  std::string name;  // train / dev / test
  std::vector<CorpusToken> tokens;
};

struct AuditRow {
  std::string split;
  std::string dataset;
  std::uint64_t female = 0;
  std::uint64_t male = 0;
  int female_pct = 0;  // rounded half up; male_pct = 100 - female_pct
  int male_pct = 0;
  bool empty = false;  // no names found; percentages are meaningless
};

struct AuditReport {
  AuditRow census;
  std::vector<AuditRow> splits;
};

// Integer percentages for a (female, male) pair.
std::pair<int, int> RoundedPercentages(std::uint64_t female, std::uint64_t male);

// Counts distinct census names per gender in each split. The census row is
// the per-gender unique-name baseline over options.years.
AuditReport AuditGenderRepresentation(std::span<const CorpusSplit> splits,
                                      const CensusIndex& index,
                                      const AuditOptions& options,
                                      std::string_view dataset);

// Columns: split,dataset,female_count,male_count,female_pct,male_pct.
void WriteAuditCsv(std::ostream& out, const AuditReport& report);

}  // namespace nerbias

#endif  // NERBIAS_CORPUS_AUDIT_H_
