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

#ifndef NERBIAS_ERRORS_H_
#define NERBIAS_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nerbias {

// Base class for every error raised by the harness.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. Carries the source name and 1-based line number
// (0 when the error is not tied to a line).
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

// A wire-protocol record that cannot be decoded. field() names the
// offending field, or is empty when the whole line is unparseable.
class ProtocolError : public Error {
 public:
  ProtocolError(std::string field, const std::string& what);

  const std::string& field() const { return field_; }
  // Message without the field prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::string field_;
  std::string detail_;
};

// Inconsistent data: spans out of bounds, missing items, mismatched digests.
class DataError : public Error {
 public:
  using Error::Error;
};

// Failure while driving an adapter process. ids() lists the items that
// were left without a valid response.
class AdapterError : public Error {
 public:
  AdapterError(const std::string& what, std::vector<std::string> ids);

  const std::vector<std::string>& ids() const { return ids_; }

 private:
  std::vector<std::string> ids_;
};

// Joins up to max_shown ids for error messages, with a "(+N more)" suffix.
std::string JoinIds(const std::vector<std::string>& ids,
                    std::size_t max_shown = 10);

}  // namespace nerbias

#endif  // NERBIAS_ERRORS_H_
