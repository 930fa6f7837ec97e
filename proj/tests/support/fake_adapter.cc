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

// Test adapter: gazetteer tagging plus fault injection.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "nerbias/gazetteer.h"
#include "nerbias/protocol.h"

int main(int argc, char** argv) {
  CLI::App app{"fault-injecting test adapter"};
  std::vector<std::string> entries;
  std::size_t batch = 1;
  bool reverse = false;
  long shuffle_seed = -1;
  long exit_after = -1;
  bool duplicate_first = false;
  bool unknown_id = false;
  std::string hang_on, error_on, garbage_on;
  app.add_option("--entry", entries);
  app.add_option("--batch", batch);
  app.add_flag("--reverse", reverse);
  app.add_option("--shuffle-seed", shuffle_seed);
  app.add_option("--exit-after", exit_after);
  app.add_flag("--duplicate-first", duplicate_first);
  app.add_flag("--unknown-id", unknown_id);
  app.add_option("--hang-on", hang_on);
  app.add_option("--error-on", error_on);
  app.add_option("--garbage-on", garbage_on);
  CLI11_PARSE(app, argc, argv);

  nerbias::Lexicon lexicon;
  for (const std::string& e : entries) {
    auto eq = e.find('=');
    lexicon.Set(e.substr(0, eq), e.substr(eq + 1));
  }

  std::mt19937 rng(static_cast<unsigned>(shuffle_seed < 0 ? 0 : shuffle_seed));
  std::vector<std::string> pending;
  auto flush = [&] {
    if (reverse) std::reverse(pending.begin(), pending.end());
    if (shuffle_seed >= 0) std::shuffle(pending.begin(), pending.end(), rng);
    for (const std::string& line : pending) std::cout << line << '\n';
    std::cout.flush();
    pending.clear();
  };

  if (unknown_id) {
    std::cout << R"({"id":"no-such-item","entities":[]})" << '\n' << std::flush;
  }
  long answered = 0;
  long hung = 0;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (exit_after >= 0 && answered >= exit_after) {
      flush();
      std::_Exit(0);
    }
    nerbias::Request request = nerbias::DecodeRequest(line);
    if (!hang_on.empty() && request.text.find(hang_on) != std::string::npos) {
      ++hung;
      continue;
    }
    std::string response;
    if (!error_on.empty() && request.text.find(error_on) != std::string::npos) {
      response = nerbias::EncodeErrorResponse(request.id, "injected failure");
    } else if (!garbage_on.empty() &&
               request.text.find(garbage_on) != std::string::npos) {
      response = "{not json";
    } else {
      response = nerbias::EncodeResponse(nerbias::GazetteerTagRequest(request, lexicon));
    }
    pending.push_back(response);
    if (duplicate_first && answered == 0) pending.push_back(response);
    ++answered;
    if (pending.size() >= batch) flush();
  }
  flush();
  // Withheld answers: stay alive so only the timeout can end the run.
  while (hung > 0) std::this_thread::sleep_for(std::chrono::seconds(1));
  return 0;
}
