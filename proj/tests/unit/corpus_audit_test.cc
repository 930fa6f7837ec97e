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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "nerbias/errors.h"
#include "test_paths.h"

namespace nerbias {
namespace {

std::vector<CorpusToken> Parse(const std::string& text, ConllConfig config = {}) {
  std::istringstream in(text);
  return ParseConll(in, config, "corpus");
}

TEST(ParseConll, TokenLine) {
  auto tokens = Parse("Mary NNP I-NP I-PER\n");
  ASSERT_EQ(tokens.size(), 1u);
  EXPECT_EQ(tokens[0].surface, "Mary");
  EXPECT_EQ(tokens[0].ner_tag, "I-PER");
}

TEST(ParseConll, DocstartAndBlankLines) {
  auto tokens = Parse(
      "-DOCSTART- -X- O O\n\n"
      "Mary NNP I-NP I-PER\nsang VBD I-VP O\n\n"
      "John NNP I-NP I-PER\n\n"
      "-DOCSTART- -X- O O\n\n"
      "Ana NNP I-NP I-PER\n");
  ASSERT_EQ(tokens.size(), 4u);
  EXPECT_EQ(tokens[1].position, 1u);
  EXPECT_EQ(tokens[1].sentence, tokens[0].sentence);
  EXPECT_NE(tokens[2].sentence, tokens[1].sentence);
  EXPECT_EQ(tokens[2].position, 0u);
  EXPECT_EQ(tokens[0].document, tokens[2].document);
  EXPECT_NE(tokens[3].document, tokens[2].document);
}

TEST(ParseConll, ShortLineIsParseError) {
  try {
    Parse("Mary NNP I-NP I-PER\nBroken NNP\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  auto two_col = Parse("Mary B-PER\n", {.tag_column = 1, .scheme = TagScheme::kIob2});
  EXPECT_EQ(two_col[0].ner_tag, "B-PER");
}

TEST(IsPersonTag, Schemes) {
  LabelMap labels = LabelMap::Default();
  EXPECT_TRUE(IsPersonTag("I-PER", TagScheme::kIob1, labels));
  EXPECT_TRUE(IsPersonTag("B-PER", TagScheme::kIob2, labels));
  EXPECT_TRUE(IsPersonTag("U-PER", TagScheme::kBilou, labels));
  EXPECT_TRUE(IsPersonTag("L-PERSON", TagScheme::kBilou, labels));
  EXPECT_FALSE(IsPersonTag("I-LOC", TagScheme::kIob1, labels));
  EXPECT_FALSE(IsPersonTag("O", TagScheme::kIob1, labels));
  EXPECT_THROW(IsPersonTag("U-PER", TagScheme::kIob2, labels), DataError);
}

CensusIndex SmallIndex() {
  std::istringstream in("Ana,F,50\nJordan,F,10\nJohn,M,100\nJordan,M,300\n");
  CensusIndex index;
  index.AddYear(2000, ParseYearFile(in, 2000));
  return index;
}

AuditOptions Options(MatchMode mode = MatchMode::kAnyToken) {
  AuditOptions options;
  options.mode = mode;
  options.years = {2000, 2000};
  return options;
}

CorpusSplit Split(std::string name, const std::string& text) {
  return {std::move(name), Parse(text)};
}

TEST(Audit, AnaParisJohn) {
  std::istringstream in("Ana,F,50\nJohn,M,100\n");
  CensusIndex index;
  index.AddYear(2000, ParseYearFile(in, 2000));
  std::vector<CorpusSplit> splits = {
      Split("train", "Ana NNP I-NP I-PER\nParis NNP I-NP I-LOC\nJohn NNP I-NP I-PER\n")};
  AuditReport r = AuditGenderRepresentation(splits, index, Options(), "toy");
  ASSERT_EQ(r.splits.size(), 1u);
  EXPECT_EQ(r.splits[0].female, 1u);
  EXPECT_EQ(r.splits[0].male, 1u);
  EXPECT_EQ(r.splits[0].female_pct, 50);
  EXPECT_EQ(r.splits[0].male_pct, 50);
}

TEST(Audit, ModesAndUnisex) {
  CensusIndex index = SmallIndex();
  std::vector<CorpusSplit> splits = {Split(
      "train", "Jordan NNP I-NP I-LOC\nAna NNP I-NP I-PER\njohn NN I-NP O\n")};
  AuditReport any = AuditGenderRepresentation(splits, index, Options(), "toy");
  EXPECT_EQ(any.splits[0].female, 2u);
  EXPECT_EQ(any.splits[0].male, 1u);

  AuditReport person =
      AuditGenderRepresentation(splits, index, Options(MatchMode::kPersonTagged), "toy");
  EXPECT_EQ(person.splits[0].female, 1u);
  EXPECT_EQ(person.splits[0].male, 0u);

  AuditOptions folded = Options();
  folded.case_insensitive = true;
  AuditReport ci = AuditGenderRepresentation(splits, index, folded, "toy");
  EXPECT_EQ(ci.splits[0].male, 2u);

  AuditOptions exclusive = Options();
  exclusive.exclusive_gender = true;
  AuditReport ex = AuditGenderRepresentation(splits, index, exclusive, "toy");
  EXPECT_EQ(ex.splits[0].female, 1u);
  EXPECT_EQ(ex.splits[0].male, 1u);
  EXPECT_EQ(ex.census.female, 1u);
  EXPECT_EQ(ex.census.male, 2u);
}

TEST(Audit, CensusRowMatchesUniqueNames) {
  CensusIndex index = LoadCensus(testing::FixturesDir() / "census_small");
  AuditOptions options;
  options.years = index.Coverage();
  AuditReport r = AuditGenderRepresentation({}, index, options, "x");
  EXPECT_EQ(r.census.split, "all");
  EXPECT_EQ(r.census.dataset, "Census");
  EXPECT_EQ(r.census.female, UniqueNames(index, Gender::kFemale, options.years).size());
  EXPECT_EQ(r.census.male, UniqueNames(index, Gender::kMale, options.years).size());
}

TEST(Audit, EmptySplitFlagged) {
  std::vector<CorpusSplit> splits = {Split("dev", "")};
  AuditReport r = AuditGenderRepresentation(splits, SmallIndex(), Options(), "toy");
  EXPECT_TRUE(r.splits[0].empty);
  std::ostringstream csv;
  WriteAuditCsv(csv, r);
  EXPECT_NE(csv.str().find("dev,toy,0,0,,\n"), std::string::npos);
}

TEST(RoundedPercentages, HalfUpAndSumTo100) {
  EXPECT_EQ(RoundedPercentages(1810, 2506), (std::pair{42, 58}));
  EXPECT_EQ(RoundedPercentages(962, 1311), (std::pair{42, 58}));
  EXPECT_EQ(RoundedPercentages(879, 1228), (std::pair{42, 58}));
  EXPECT_EQ(RoundedPercentages(67698, 41475), (std::pair{62, 38}));
  EXPECT_EQ(RoundedPercentages(1, 1), (std::pair{50, 50}));
  EXPECT_EQ(RoundedPercentages(1, 7), (std::pair{13, 87}));
  EXPECT_EQ(RoundedPercentages(1, 199), (std::pair{1, 99}));
}

// Random corpora over a fixed vocabulary: duplicating sentences never
// changes counts, and PERSON-only matching never finds more than any-token.
TEST(AuditProperty, DuplicationAndModeOrdering) {
  CensusIndex index = SmallIndex();
  const std::vector<std::string> words = {"Ana", "Jordan", "John", "Paris", "the", "ana"};
  const std::vector<std::string> tags = {"I-PER", "I-LOC", "O", "B-PER"};
  std::mt19937 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    std::string text;
    for (int s = 0, n = rng() % 5; s < n; ++s) {
      for (int t = 0, m = 1 + rng() % 6; t < m; ++t) {
        text += words[rng() % words.size()] + " X X " + tags[rng() % tags.size()] + "\n";
      }
      text += "\n";
    }
    std::vector<CorpusSplit> once = {Split("train", text)};
    std::vector<CorpusSplit> twice = {Split("train", text + text + text)};
    for (MatchMode mode : {MatchMode::kAnyToken, MatchMode::kPersonTagged}) {
      AuditReport a = AuditGenderRepresentation(once, index, Options(mode), "t");
      AuditReport b = AuditGenderRepresentation(twice, index, Options(mode), "t");
      EXPECT_EQ(a.splits[0].female, b.splits[0].female);
      EXPECT_EQ(a.splits[0].male, b.splits[0].male);
    }
    AuditReport any = AuditGenderRepresentation(once, index, Options(), "t");
    AuditReport per =
        AuditGenderRepresentation(once, index, Options(MatchMode::kPersonTagged), "t");
    EXPECT_LE(per.splits[0].female, any.splits[0].female);
    EXPECT_LE(per.splits[0].male, any.splits[0].male);
  }
}

}  // namespace
}  // namespace nerbias
