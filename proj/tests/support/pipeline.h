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

#ifndef NERBIAS_TESTS_SUPPORT_PIPELINE_H_
#define NERBIAS_TESTS_SUPPORT_PIPELINE_H_

#include <span>
#include <string>

#include "nerbias/benchmark.h"
#include "nerbias/census.h"
#include "nerbias/gazetteer.h"
#include "nerbias/protocol.h"
#include "nerbias/runner.h"

namespace nerbias::testing {

// In-process gazetteer run, no subprocess involved.
inline RunResult TagInProcess(std::span<const BenchmarkItem> items,
                              const Lexicon& lexicon) {
  RunResult run;
  for (const BenchmarkItem& item : items) {
    TaggedItem tagged;
    tagged.item_id = item.item_id;
    tagged.entities = GazetteerTag(item.text, item.name_span, lexicon);
    run.tagged.emplace(item.item_id, std::move(tagged));
  }
  return run;
}

inline Lexicon MiniLexicon() {
  Lexicon lexicon;
  lexicon.Set("Ana", "PERSON");
  lexicon.Set("John", "PERSON");
  lexicon.Set("Paris", "LOC");
  lexicon.Set("Jordan", "LOC");
  return lexicon;
}

inline BenchmarkConfig SingleTemplateConfig(YearRange years, int template_id) {
  BenchmarkConfig config = DefaultBenchmarkConfig();
  config.selection.years = years;
  config.selection.template_ids = {template_id};
  return config;
}

}  // namespace nerbias::testing

#endif  // NERBIAS_TESTS_SUPPORT_PIPELINE_H_
