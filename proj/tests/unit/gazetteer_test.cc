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

#include "nerbias/gazetteer.h"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "nerbias/utf8.h"
#include "test_paths.h"

namespace nerbias {
namespace {

TEST(GazetteerTag, Examples) {
  Lexicon lexicon;
  lexicon.Set("Ana", "PERSON");
  lexicon.Set("Paris", "LOC");
  auto ana = GazetteerTag("Ana is a person", {0, 3}, lexicon);
  ASSERT_EQ(ana.size(), 1u);
  EXPECT_EQ(ana[0].span, (CharSpan{0, 3}));
  EXPECT_EQ(ana[0].raw_label, "PERSON");
  auto paris = GazetteerTag("Paris is a person", {0, 5}, lexicon);
  ASSERT_EQ(paris.size(), 1u);
  EXPECT_EQ(paris[0].raw_label, "LOC");
  EXPECT_TRUE(GazetteerTag("King is a person", {0, 4}, Lexicon{}).empty());
}

TEST(LeadingTokenSpan, CodePoints) {
  EXPECT_EQ(LeadingTokenSpan("José is here"), (CharSpan{0, 4}));
  EXPECT_EQ(LeadingTokenSpan("Mary"), (CharSpan{0, 4}));
  EXPECT_EQ(LeadingTokenSpan(""), (CharSpan{0, 0}));
}

TEST(Lexicon, FromFixture) {
  std::ifstream in(testing::FixturesDir() / "lexicon_small.tsv");
  Lexicon lexicon = Lexicon::FromStream(in, "lexicon_small.tsv");
  EXPECT_EQ(lexicon.Find("Victoria"), "LOCATION");
  EXPECT_FALSE(lexicon.Find("King"));
}

// Every emitted span slices to a substring whose leading token is the
// surface form that was looked up.
TEST(GazetteerTagRequest, OffsetConvention) {
  Lexicon lexicon;
  for (const char* name : {"Charlotte", "José", "Zoë", "日本"}) lexicon.Set(name, "LOC");
  for (const char* name : {"Charlotte", "José", "Zoë", "日本"}) {
    Request r{"x", std::string(name) + " is a person"};
    TaggedItem t = GazetteerTagRequest(r, lexicon);
    ASSERT_EQ(t.entities.size(), 1u);
    EXPECT_EQ(utf8::Slice(r.text, t.entities[0].span.start, t.entities[0].span.end), name);
  }
}

}  // namespace
}  // namespace nerbias
