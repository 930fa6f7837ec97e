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

#include "nerbias/benchmark.h"

#include <gtest/gtest.h>

#include <sstream>

#include "nerbias/errors.h"
#include "nerbias/utf8.h"
#include "test_paths.h"

namespace nerbias {
namespace {

TEST(BuiltinTemplates, FrozenPatterns) {
  const std::vector<std::string> expected = {
      "<Name>",
      "<Name> is going to school",
      "<Name> is at school",
      "<Name> is a person",
      "<Name> is eating food",
      "<Name> is going to grocery shop",
      "<Name> is going to work",
      "<Name> is a nurse",
      "<Name> is a doctor",
  };
  auto templates = BuiltinTemplates();
  ASSERT_EQ(templates.size(), 9u);
  for (std::size_t i = 0; i < templates.size(); ++i) {
    EXPECT_EQ(templates[i].id, static_cast<int>(i) + 1);
    EXPECT_EQ(templates[i].pattern, expected[i]);
    EXPECT_TRUE(templates[i].pattern.starts_with(kNamePlaceholder));
  }
}

TEST(Instantiate, Examples) {
  auto templates = BuiltinTemplates();
  Instantiation a = Instantiate(FindTemplate(templates, 4), "Charlotte");
  EXPECT_EQ(a.text, "Charlotte is a person");
  EXPECT_EQ(a.name_span, (CharSpan{0, 9}));
  Instantiation b = Instantiate(FindTemplate(templates, 1), "X");
  EXPECT_EQ(b.text, "X");
  EXPECT_EQ(b.name_span, (CharSpan{0, 1}));
  Instantiation c = Instantiate(FindTemplate(templates, 8), "Mary");
  EXPECT_EQ(c.text, "Mary is a nurse");
  EXPECT_EQ(c.name_span, (CharSpan{0, 4}));
}

TEST(Instantiate, SpanCountsCodePoints) {
  Instantiation inst = Instantiate(FindTemplate(BuiltinTemplates(), 4), "José");
  EXPECT_EQ(inst.name_span, (CharSpan{0, 4}));
  EXPECT_EQ(utf8::Slice(inst.text, 0, 4), "José");
}

TEST(Instantiate, RejectsBadNames) {
  const Template& t = FindTemplate(BuiltinTemplates(), 4);
  EXPECT_THROW(Instantiate(t, "Mary Ann"), Error);
  EXPECT_THROW(Instantiate(t, ""), Error);
  EXPECT_THROW(Instantiate(t, "Mary\tAnn"), Error);
}

TEST(MakeTemplate, Validation) {
  EXPECT_NO_THROW(MakeTemplate(1, "<Name> sings"));
  EXPECT_THROW(MakeTemplate(1, "Hello <Name>"), Error);
  EXPECT_THROW(MakeTemplate(1, "<Name> and <Name>"), Error);
  EXPECT_THROW(MakeTemplate(1, "<Name> is\nhere"), Error);
}

TEST(LoadTemplates, AssignsIdsInOrder) {
  std::istringstream in("# custom\n<Name> sings\n\n<Name> dances\n");
  auto templates = LoadTemplates(in);
  ASSERT_EQ(templates.size(), 2u);
  EXPECT_EQ(templates[1], (Template{2, "<Name> dances"}));
  EXPECT_THROW(FindTemplate(templates, 3), Error);
}

TEST(ItemId, RoundTrip) {
  std::string id = MakeItemId(2018, Gender::kFemale, 4, "Charlotte");
  EXPECT_EQ(id, "2018-F-t4-Charlotte");
  EXPECT_EQ(ParseItemId(id), (ItemKey{2018, Gender::kFemale, 4, "Charlotte"}));
  EXPECT_EQ(ParseItemId(MakeItemId(1880, Gender::kMale, 9, "Jean-Luc")).name, "Jean-Luc");
  EXPECT_THROW(ParseItemId("garbage"), Error);
}

CensusIndex OneYearIndex() {
  std::istringstream in("Ana,F,50\nBea,F,10\nJohn,M,100\nKarl,M,8\nLeo,M,9\n");
  CensusIndex index;
  index.AddYear(1990, ParseYearFile(in, 1990));
  return index;
}

TEST(Generate, CardinalityAndOrder) {
  CensusIndex index = OneYearIndex();
  BenchmarkConfig config = DefaultBenchmarkConfig();
  config.selection.years = {1990, 1990};
  auto items = Generate(index, config);
  ASSERT_EQ(items.size(), 45u);
  EXPECT_EQ(items.front().item_id, "1990-F-t1-Ana");
  EXPECT_EQ(items[9].item_id, "1990-F-t1-Bea");
  EXPECT_EQ(items.back().item_id, "1990-M-t9-Leo");
  std::set<std::string> ids;
  for (const auto& item : items) ids.insert(item.item_id);
  EXPECT_EQ(ids.size(), 45u);
}

TEST(Generate, Charlotte2018Template4) {
  CensusIndex index = LoadCensus(testing::FixturesDir() / "census_small");
  BenchmarkConfig config = DefaultBenchmarkConfig();
  config.selection.years = {2018, 2018};
  config.selection.genders = {Gender::kFemale};
  config.selection.template_ids = {4};
  auto items = Generate(index, config);
  EXPECT_EQ(items.size(), index.Find(2018, Gender::kFemale)->size());
  bool found = false;
  for (const auto& item : items) found |= item.text == "Charlotte is a person";
  EXPECT_TRUE(found);
}

TEST(Generate, PureAndRecoverable) {
  CensusIndex index = LoadCensus(testing::FixturesDir() / "census_small");
  BenchmarkConfig config = DefaultBenchmarkConfig();
  config.selection.years = index.Coverage();
  auto a = Generate(index, config);
  auto b = Generate(index, config);
  EXPECT_EQ(a, b);
  for (const auto& item : a) {
    const Template& t = FindTemplate(config.templates, item.template_id);
    EXPECT_EQ(RecoverName(t, item.text), item.name);
    EXPECT_EQ(item.name_span.start, 0u);
    EXPECT_EQ(utf8::Slice(item.text, item.name_span.start, item.name_span.end), item.name);
    EXPECT_EQ(ParseItemId(item.item_id),
              (ItemKey{item.year, item.gender, item.template_id, item.name}));
  }
}

TEST(Generate, SelectionErrors) {
  CensusIndex index = OneYearIndex();
  BenchmarkConfig config = DefaultBenchmarkConfig();
  config.selection.years = {1990, 1990};
  config.selection.genders.clear();
  EXPECT_THROW(Generate(index, config), Error);
  config = DefaultBenchmarkConfig();
  config.selection.years = {1990, 1990};
  config.selection.template_ids = {10};
  EXPECT_THROW(Generate(index, config), Error);
  config.selection.template_ids = {};
  config.selection.years = {1980, 1990};
  EXPECT_THROW(Generate(index, config), Error);
}

TEST(RecoverName, RejectsNonMatching) {
  const Template& t = FindTemplate(BuiltinTemplates(), 4);
  EXPECT_FALSE(RecoverName(t, "Ana is a nurse"));
  EXPECT_FALSE(RecoverName(t, " is a person"));
}

}  // namespace
}  // namespace nerbias
