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
#ifndef NERBIAS_TOOLS_CLI_H_
#define NERBIAS_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace nerbias::cli {

// Environment variable naming the default census directory.
inline constexpr const char* kCensusEnv = "NERBIAS_CENSUS_DIR";

// Runs the nerbias command line. args excludes the program name. Returns
// the process exit status: 0 on success, 1 on a runtime failure and the
// CLI11 code (>= 100) on a usage error.
int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err);

}  // namespace nerbias::cli

#endif  // NERBIAS_TOOLS_CLI_H_
