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

#include "nerbias/protocol.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <tuple>

#include "nerbias/errors.h"

namespace nerbias {
namespace {

std::string RandomText(std::mt19937& rng) {
  static const std::vector<std::string> kPieces = {
      "a", "Z", " ", "José", "Zoë", "日本", "\"", "\\", "\t", "é", "ß", "😀",
      "is", "{", "}", ",", ":", "\x01", " "};
  std::string out;
  for (int i = 0, n = rng() % 12; i < n; ++i) out += kPieces[rng() % kPieces.size()];
  return out;
}

TEST(EncodeRequest, CarriesIdAndText) {
  Request r{"a1", "Mary is a person"};
  std::string line = EncodeRequest(r);
  EXPECT_EQ(line, R"({"id":"a1","text":"Mary is a person"})");
  EXPECT_EQ(line.find('\n'), std::string::npos);
  EXPECT_EQ(DecodeRequest(line), r);
}

TEST(EncodeRequest, UnicodeRoundTrip) {
  Request r{"x", "José is a person"};
  std::string line = EncodeRequest(r);
  EXPECT_NE(line.find("José"), std::string::npos);
  EXPECT_EQ(DecodeRequest(line).text, r.text);
}

TEST(EncodeRequest, RejectsLineBreaksAndBadUtf8) {
  try {
    EncodeRequest(Request{"a", "two\nlines"});
    FAIL();
  } catch (const ProtocolError& e) {
    EXPECT_EQ(e.field(), "text");
  }
  EXPECT_THROW(EncodeRequest(Request{"a", "bad\xC3"}), ProtocolError);
  EXPECT_THROW(EncodeRequest(Request{"a", "cr\r"}), ProtocolError);
}

TEST(EncodeRequest, RandomRoundTrip) {
  std::mt19937 rng(42);
  for (int i = 0; i < 1000; ++i) {
    Request r{RandomText(rng) + std::to_string(i), RandomText(rng)};
    std::string line = EncodeRequest(r);
    ASSERT_EQ(line.find('\n'), std::string::npos);
    ASSERT_EQ(DecodeRequest(line), r);
  }
}

TEST(DecodeResponse, LocSpan) {
  TaggedItem t = DecodeResponse(R"({"id":"a1","entities":[{"start":0,"end":9,"label":"LOC"}]})");
  EXPECT_EQ(t.item_id, "a1");
  ASSERT_EQ(t.entities.size(), 1u);
  EXPECT_EQ(t.entities[0].span, (CharSpan{0, 9}));
  EXPECT_EQ(t.entities[0].raw_label, "LOC");
  EXPECT_TRUE(t.entities[0].normalized_label.empty());
}

TEST(DecodeResponse, EmptyEntities) {
  TaggedItem t = DecodeResponse(R"({"id":"a1","entities":[]})");
  EXPECT_TRUE(t.entities.empty());
}

TEST(DecodeResponse, SortsEntities) {
  TaggedItem t = DecodeResponse(
      R"({"id":"a","entities":[{"start":5,"end":7,"label":"X"},{"start":0,"end":2,"label":"Y"}]})");
  EXPECT_EQ(t.entities[0].span.start, 0u);
}

void ExpectField(const std::string& line, const std::string& field) {
  try {
    DecodeResponse(line);
    ADD_FAILURE() << "accepted: " << line;
  } catch (const ProtocolError& e) {
    EXPECT_EQ(e.field(), field) << line;
  }
}

TEST(DecodeResponse, ErrorsNameTheField) {
  ExpectField("{not json", "");
  ExpectField("[1,2]", "");
  ExpectField(R"({"entities":[]})", "id");
  ExpectField(R"({"id":5,"entities":[]})", "id");
  ExpectField(R"({"id":"a1"})", "entities");
  ExpectField(R"({"id":"a1","entities":{}})", "entities");
  ExpectField(R"({"id":"a","entities":[{"start":-1,"end":2,"label":"X"}]})",
              "entities[0].start");
  ExpectField(R"({"id":"a","entities":[{"start":0,"end":2,"label":"X"},{"start":3,"end":1,"label":"X"}]})",
              "entities[1].end");
  ExpectField(R"({"id":"a","entities":[{"start":3,"end":3,"label":"X"}]})",
              "entities[0].end");
  ExpectField(R"({"id":"a","entities":[{"start":0,"end":2}]})", "entities[0].label");
  ExpectField(R"({"id":"a","entities":[{"start":0.5,"end":2,"label":"X"}]})",
              "entities[0].start");
}

TEST(DecodeResponseRecord, ErrorRecord) {
  ResponseRecord r = DecodeResponseRecord(EncodeErrorResponse("a1", "model crashed"));
  EXPECT_EQ(r.item.item_id, "a1");
  EXPECT_EQ(r.error, "model crashed");
  EXPECT_THROW(DecodeResponse(EncodeErrorResponse("a1", "x")), ProtocolError);
}

TEST(EncodeResponse, RandomRoundTrip) {
  std::mt19937 rng(9);
  for (int i = 0; i < 1000; ++i) {
    TaggedItem t{"id" + std::to_string(i) + RandomText(rng), {}};
    for (int k = 0, n = rng() % 4; k < n; ++k) {
      std::size_t start = rng() % 50;
      t.entities.push_back({{start, start + 1 + rng() % 10}, "L" + RandomText(rng), {}});
    }
    std::sort(t.entities.begin(), t.entities.end(),
              [](const EntitySpan& a, const EntitySpan& b) {
                return std::tie(a.span, a.raw_label) < std::tie(b.span, b.raw_label);
              });
    ASSERT_EQ(DecodeResponse(EncodeResponse(t)), t);
  }
}

TEST(ApplyLabelMap, FillsNormalized) {
  TaggedItem t = DecodeResponse(
      R"({"id":"a","entities":[{"start":0,"end":2,"label":"GPE"},{"start":3,"end":4,"label":"ORG"}]})");
  ApplyLabelMap(t, LabelMap::Default());
  EXPECT_EQ(t.entities[0].normalized_label, "LOC");
  EXPECT_EQ(t.entities[1].normalized_label, "OTHER");
}

}  // namespace
}  // namespace nerbias
