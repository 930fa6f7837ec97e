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

#ifndef NERBIAS_UTF8_H_
#define NERBIAS_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace nerbias::utf8 {

bool IsValid(std::string_view text);

// Number of code points. Throws nerbias::Error on invalid UTF-8.
std::size_t Length(std::string_view text);

// Byte offset of the code point at index cp. cp may equal Length(text).
std::size_t ByteOffset(std::string_view text, std::size_t cp);

// Sub-string by code-point offsets [start, end).
std::string_view Slice(std::string_view text, std::size_t start,
                       std::size_t end);

// ASCII whitespace plus the Unicode space separators SSA-style tokens must
// never contain.
bool ContainsWhitespace(std::string_view text);

// ASCII-only lowercase; non-ASCII bytes pass through.
std::string AsciiLower(std::string_view text);

}  // namespace nerbias::utf8

#endif  // NERBIAS_UTF8_H_
