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
#include "nerbias/utf8.h"

#include <fmt/format.h>

#include "nerbias/errors.h"

namespace nerbias::utf8 {
namespace {

// Length in bytes of the sequence starting at text[i], or 0 if invalid.
std::size_t SequenceLength(std::string_view text, std::size_t i) {
  auto byte = [&](std::size_t k) {
    return static_cast<unsigned char>(text[k]);
  };
  unsigned char lead = byte(i);
  std::size_t len;
  char32_t cp;
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) {
    len = 2;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4;
    cp = lead & 0x07;
  } else {
    return 0;
  }
  if (i + len > text.size()) return 0;
  for (std::size_t k = 1; k < len; ++k) {
    if ((byte(i + k) & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (byte(i + k) & 0x3F);
  }
  // Overlong forms, surrogates, out of range.
  static constexpr char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    return 0;
  }
  return len;
}

char32_t Decode(std::string_view text, std::size_t i, std::size_t len) {
  auto lead = static_cast<unsigned char>(text[i]);
  if (len == 1) return lead;
  char32_t cp = lead & (0xFF >> (len + 1));
  for (std::size_t k = 1; k < len; ++k) {
    cp = (cp << 6) | (static_cast<unsigned char>(text[i + k]) & 0x3F);
  }
  return cp;
}

bool IsSpace(char32_t cp) {
  switch (cp) {
    case ' ': case '\t': case '\n': case '\v': case '\f': case '\r':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

}  // namespace

bool IsValid(std::string_view text) {
  for (std::size_t i = 0; i < text.size();) {
    std::size_t len = SequenceLength(text, i);
    if (len == 0) return false;
    i += len;
  }
  return true;
}

std::size_t Length(std::string_view text) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < text.size(); ++count) {
    std::size_t len = SequenceLength(text, i);
    if (len == 0) throw Error(fmt::format("invalid UTF-8 at byte {}", i));
    i += len;
  }
  return count;
}

std::size_t ByteOffset(std::string_view text, std::size_t cp) {
  std::size_t i = 0;
  for (std::size_t n = 0; n < cp; ++n) {
    if (i >= text.size()) {
      throw Error(fmt::format("code point offset {} past end of text", cp));
    }
    std::size_t len = SequenceLength(text, i);
    if (len == 0) throw Error(fmt::format("invalid UTF-8 at byte {}", i));
    i += len;
  }
  return i;
}

std::string_view Slice(std::string_view text, std::size_t start,
                       std::size_t end) {
  if (end < start) {
    throw Error(fmt::format("inverted code point range [{}, {})", start, end));
  }
  std::size_t begin_byte = ByteOffset(text, start);
  std::size_t end_byte =
      begin_byte + ByteOffset(text.substr(begin_byte), end - start);
  return text.substr(begin_byte, end_byte - begin_byte);
}

bool ContainsWhitespace(std::string_view text) {
  for (std::size_t i = 0; i < text.size();) {
    std::size_t len = SequenceLength(text, i);
    if (len == 0) {
      ++i;
      continue;
    }
    if (IsSpace(Decode(text, i, len))) return true;
    i += len;
  }
  return false;
}

std::string AsciiLower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace nerbias::utf8
