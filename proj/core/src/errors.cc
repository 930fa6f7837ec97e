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
#include "nerbias/errors.h"

#include <utility>

#include <fmt/format.h>

namespace nerbias {

ParseError::ParseError(std::string source, std::size_t line,
                       const std::string& what)
    : Error(line > 0 ? fmt::format("{}:{}: {}", source, line, what)
                     : fmt::format("{}: {}", source, what)),
      source_(std::move(source)),
      line_(line) {}

ProtocolError::ProtocolError(std::string field, const std::string& what)
    : Error(field.empty() ? what : fmt::format("field '{}': {}", field, what)),
      field_(std::move(field)),
      detail_(what) {}

AdapterError::AdapterError(const std::string& what,
                           std::vector<std::string> ids)
    : Error(ids.empty() ? what : fmt::format("{}: {}", what, JoinIds(ids))),
      ids_(std::move(ids)) {}

std::string JoinIds(const std::vector<std::string>& ids,
                    std::size_t max_shown) {
  std::string out;
  for (std::size_t i = 0; i < ids.size() && i < max_shown; ++i) {
    if (i > 0) out += ", ";
    out += ids[i];
  }
  if (ids.size() > max_shown) {
    out += fmt::format(" (+{} more)", ids.size() - max_shown);
  }
  return out;
}

}  // namespace nerbias
