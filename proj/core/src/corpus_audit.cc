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
#include "nerbias/corpus_audit.h"

#include <set>
#include <unordered_set>

#include <fmt/format.h>

#include "nerbias/errors.h"
#include "nerbias/utf8.h"

namespace nerbias {
namespace {

constexpr std::string_view kDocStart = "-DOCSTART-";

std::vector<std::string_view> SplitColumns(std::string_view line) {
  std::vector<std::string_view> columns;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) columns.push_back(line.substr(start, i - start));
  }
  return columns;
}

using NameSet = std::unordered_set<std::string>;

std::array<NameSet, 2> CensusNameSets(const CensusIndex& index,
                                      const AuditOptions& options) {
  std::array<NameSet, 2> sets;
  auto key = [&](const std::string& name) {
    return options.case_insensitive ? utf8::AsciiLower(name) : name;
  };
  if (!options.exclusive_gender) {
    for (Gender g : kAllGenders) {
      for (const std::string& name : UniqueNames(index, g, options.years)) {
        sets[static_cast<int>(g)].insert(key(name));
      }
    }
    return sets;
  }
  auto female = AggregateCounts(index, Gender::kFemale, options.years);
  auto male = AggregateCounts(index, Gender::kMale, options.years);
  // Ties keep the name under both genders.
  for (const auto& [name, count] : female) {
    auto it = male.find(name);
    if (it == male.end() || count >= it->second) {
      sets[static_cast<int>(Gender::kFemale)].insert(key(name));
    }
  }
  for (const auto& [name, count] : male) {
    auto it = female.find(name);
    if (it == female.end() || count >= it->second) {
      sets[static_cast<int>(Gender::kMale)].insert(key(name));
    }
  }
  return sets;
}

AuditRow MakeRow(std::string split, std::string_view dataset,
                 std::uint64_t female, std::uint64_t male) {
  AuditRow row;
  row.split = std::move(split);
  row.dataset = std::string(dataset);
  row.female = female;
  row.male = male;
  row.empty = female + male == 0;
  std::tie(row.female_pct, row.male_pct) = RoundedPercentages(female, male);
  return row;
}

}  // namespace

TagScheme ParseTagScheme(std::string_view text) {
  if (text == "iob1") return TagScheme::kIob1;
  if (text == "iob2") return TagScheme::kIob2;
  if (text == "bilou") return TagScheme::kBilou;
  throw Error(fmt::format("unknown tag scheme '{}' (iob1, iob2, bilou)", text));
}

std::string_view TagSchemeName(TagScheme scheme) {
  switch (scheme) {
    case TagScheme::kIob1:
      return "iob1";
    case TagScheme::kIob2:
      return "iob2";
    case TagScheme::kBilou:
      return "bilou";
  }
  return "?";
}

MatchMode ParseMatchMode(std::string_view text) {
  if (text == "any-token") return MatchMode::kAnyToken;
  if (text == "person-tagged") return MatchMode::kPersonTagged;
  throw Error(fmt::format("unknown match mode '{}' (any-token, person-tagged)", text));
}

std::string_view MatchModeName(MatchMode mode) {
  return mode == MatchMode::kAnyToken ? "any-token" : "person-tagged";
}

void ParseConll(std::istream& in, const ConllConfig& config,
                const std::function<void(const CorpusToken&)>& sink,
                std::string_view source) {
  std::string line;
  std::size_t line_no = 0;
  CorpusToken token;
  bool in_sentence = false;
  auto end_sentence = [&] {
    if (in_sentence) {
      ++token.sentence;
      token.position = 0;
      in_sentence = false;
    }
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto columns = SplitColumns(line);
    if (columns.empty()) {
      end_sentence();
      continue;
    }
    if (columns[0] == kDocStart) {
      end_sentence();
      if (line_no > 1) ++token.document;
      continue;
    }
    if (columns.size() <= config.tag_column) {
      throw ParseError(std::string(source), line_no,
                       fmt::format("expected at least {} columns, got {}",
                                   config.tag_column + 1, columns.size()));
    }
    token.surface = std::string(columns[0]);
    token.ner_tag = std::string(columns[config.tag_column]);
    sink(token);
    ++token.position;
    in_sentence = true;
  }
}

std::vector<CorpusToken> ParseConll(std::istream& in, const ConllConfig& config,
                                    std::string_view source) {
  std::vector<CorpusToken> tokens;
  ParseConll(
      in, config, [&](const CorpusToken& t) { tokens.push_back(t); }, source);
  return tokens;
}

bool IsPersonTag(std::string_view tag, TagScheme scheme, const LabelMap& labels) {
  if (tag == "O") return false;
  std::string_view type = tag;
  if (tag.size() > 2 && tag[1] == '-') {
    char prefix = tag[0];
    bool allowed = prefix == 'B' || prefix == 'I' ||
                   (scheme == TagScheme::kBilou && (prefix == 'L' || prefix == 'U'));
    if (!allowed) {
      throw DataError(fmt::format("tag '{}' has a prefix {} does not allow", tag,
                                  TagSchemeName(scheme)));
    }
    type = tag.substr(2);
  }
  return labels.IsPerson(type);
}

std::pair<int, int> RoundedPercentages(std::uint64_t female, std::uint64_t male) {
  std::uint64_t total = female + male;
  if (total == 0) return {0, 0};
  int female_pct = static_cast<int>((200 * female + total) / (2 * total));
  return {female_pct, 100 - female_pct};
}

AuditReport AuditGenderRepresentation(std::span<const CorpusSplit> splits,
                                      const CensusIndex& index,
                                      const AuditOptions& options,
                                      std::string_view dataset) {
  auto census = CensusNameSets(index, options);
  const NameSet& female_names = census[static_cast<int>(Gender::kFemale)];
  const NameSet& male_names = census[static_cast<int>(Gender::kMale)];

  AuditReport report;
  report.census = MakeRow("all", "Census", female_names.size(), male_names.size());
  for (const CorpusSplit& split : splits) {
    std::set<std::string> found_female, found_male;
    for (const CorpusToken& token : split.tokens) {
      if (options.mode == MatchMode::kPersonTagged &&
          !IsPersonTag(token.ner_tag, options.scheme, options.labels)) {
        continue;
      }
      std::string key =
          options.case_insensitive ? utf8::AsciiLower(token.surface) : token.surface;
      if (female_names.contains(key)) found_female.insert(key);
      if (male_names.contains(key)) found_male.insert(std::move(key));
    }
    report.splits.push_back(
        MakeRow(split.name, dataset, found_female.size(), found_male.size()));
  }
  return report;
}

void WriteAuditCsv(std::ostream& out, const AuditReport& report) {
  out << "split,dataset,female_count,male_count,female_pct,male_pct\n";
  auto write = [&](const AuditRow& row) {
    if (row.empty) {
      out << fmt::format("{},{},0,0,,\n", row.split, row.dataset);
    } else {
      out << fmt::format("{},{},{},{},{},{}\n", row.split, row.dataset, row.female,
                         row.male, row.female_pct, row.male_pct);
    }
  };
  write(report.census);
  for (const AuditRow& row : report.splits) write(row);
}

}  // namespace nerbias
