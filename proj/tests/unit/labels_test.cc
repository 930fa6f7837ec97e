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

#include "nerbias/labels.h"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

namespace nerbias {
namespace {

TEST(LabelMap, Defaults) {
  LabelMap labels = LabelMap::Default();
  for (const char* raw : {"PER", "PERSON", "B-PER", "I-PER", "PERSON_NAME"}) {
    EXPECT_EQ(labels.Normalize(raw), kPersonLabel) << raw;
  }
  for (const char* raw : {"LOC", "LOCATION", "GPE", "CITY"}) {
    EXPECT_EQ(labels.Normalize(raw), kLocationLabel) << raw;
  }
  EXPECT_EQ(labels.Normalize("MISC"), kMiscLabel);
  EXPECT_EQ(labels.Normalize("DATE"), kDateLabel);
  EXPECT_EQ(labels.Normalize("ORG"), kOtherLabel);
  EXPECT_EQ(labels.Normalize("per"), kOtherLabel);
}

TEST(LabelMap, FromStreamLayersOverDefaults) {
  std::istringstream in("# model specific\nNORP\tMISC\nLOC PERSON\n");
  LabelMap labels = LabelMap::FromStream(in);
  EXPECT_EQ(labels.Normalize("NORP"), kMiscLabel);
  EXPECT_EQ(labels.Normalize("LOC"), kPersonLabel);
  EXPECT_EQ(labels.Normalize("GPE"), kLocationLabel);

  std::istringstream bare("X PERSON\n");
  LabelMap only = LabelMap::FromStream(bare, false);
  EXPECT_EQ(only.Normalize("PER"), kOtherLabel);
  EXPECT_TRUE(only.IsPerson("X"));
}

TEST(LabelMap, NormalizeIsTotal) {
  LabelMap labels = LabelMap::Default();
  std::mt19937 rng(1);
  for (int i = 0; i < 1000; ++i) {
    std::string raw;
    for (int k = 0, n = rng() % 12; k < n; ++k) raw += static_cast<char>(33 + rng() % 94);
    std::string_view out = labels.Normalize(raw);
    EXPECT_FALSE(out.empty());
    EXPECT_EQ(out, labels.Normalize(raw));
  }
}

}  // namespace
}  // namespace nerbias
