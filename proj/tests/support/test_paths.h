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
#ifndef NERBIAS_TESTS_SUPPORT_TEST_PATHS_H_
#define NERBIAS_TESTS_SUPPORT_TEST_PATHS_H_

#include <filesystem>
#include <string>

namespace nerbias::testing {

inline std::filesystem::path FixturesDir() { return NERBIAS_FIXTURES_DIR; }
inline std::string GazetteerBin() { return NERBIAS_GAZETTEER_BIN; }
inline std::string FakeAdapterBin() { return NERBIAS_FAKE_ADAPTER_BIN; }
inline std::string CliBin() { return NERBIAS_CLI_BIN; }

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace nerbias::testing

#endif  // NERBIAS_TESTS_SUPPORT_TEST_PATHS_H_
