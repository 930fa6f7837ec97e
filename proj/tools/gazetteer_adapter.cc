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

// Lexicon adapter speaking the nerbias wire protocol on stdin/stdout.
//
//   nerbias-gazetteer --lexicon names.tsv [--entry Paris=LOC ...]
//
// Each request's leading token is looked up in the lexicon; a hit yields
// one entity over that token with the lexicon label, a miss yields none.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nerbias/errors.h"
#include "nerbias/gazetteer.h"
#include "nerbias/manifest.h"
#include "nerbias/protocol.h"

int main(int argc, char** argv) {
  CLI::App app{"Deterministic gazetteer NER adapter", "nerbias-gazetteer"};
  std::string lexicon_path;
  std::vector<std::string> entries;
  bool announce = false;
  app.add_option("--lexicon", lexicon_path, "'name label' lines")
      ->check(CLI::ExistingFile);
  app.add_option("--entry", entries, "Inline NAME=LABEL entry (repeatable)");
  app.add_flag("--announce", announce, "Print an adapter info record first");
  CLI11_PARSE(app, argc, argv);

  try {
    nerbias::Lexicon lexicon;
    if (!lexicon_path.empty()) {
      std::ifstream in(lexicon_path);
      lexicon = nerbias::Lexicon::FromStream(in, lexicon_path);
    }
    for (const std::string& entry : entries) {
      auto eq = entry.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == entry.size()) {
        throw nerbias::Error("--entry expects NAME=LABEL, got " + entry);
      }
      lexicon.Set(entry.substr(0, eq), entry.substr(eq + 1));
    }

    std::ios::sync_with_stdio(false);
    if (announce) {
      std::cout << R"({"adapter":{"name":"gazetteer","version":")"
                << nerbias::HarnessVersion() << "\"}}\n"
                << std::flush;
    }
    std::string line;
    while (std::getline(std::cin, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      nerbias::Request request;
      try {
        request = nerbias::DecodeRequest(line);
      } catch (const nerbias::ProtocolError& e) {
        std::cerr << "nerbias-gazetteer: skipping bad request: " << e.what() << '\n';
        continue;
      }
      try {
        std::cout << nerbias::EncodeResponse(
                         nerbias::GazetteerTagRequest(request, lexicon))
                  << '\n';
      } catch (const nerbias::Error& e) {
        std::cout << nerbias::EncodeErrorResponse(request.id, e.what()) << '\n';
      }
      std::cout.flush();
    }
  } catch (const std::exception& e) {
    std::cerr << "nerbias-gazetteer: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
