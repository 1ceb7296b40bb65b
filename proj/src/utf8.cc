//
// Copyright 2026 The NewsBreaker Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "newsbreaker/utf8.h"

namespace newsbreaker {
namespace {

constexpr char32_t kReplacement = 0xFFFD;

// Decodes one code point at `pos`; returns its byte length (>= 1).
size_t DecodeOne(std::string_view text, size_t pos, char32_t& out) {
  const auto byte = [&](size_t i) {
    return static_cast<unsigned char>(text[i]);
  };
  const unsigned char lead = byte(pos);
  size_t len = 0;
  char32_t cp = 0;
  if (lead < 0x80) {
    out = lead;
    return 1;
  } else if ((lead & 0xE0) == 0xC0) {
    len = 2;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4;
    cp = lead & 0x07;
  } else {
    out = kReplacement;
    return 1;
  }
  if (pos + len > text.size()) {
    out = kReplacement;
    return 1;
  }
  for (size_t i = 1; i < len; ++i) {
    const unsigned char cont = byte(pos + i);
    if ((cont & 0xC0) != 0x80) {
      out = kReplacement;
      return 1;
    }
    cp = (cp << 6) | (cont & 0x3F);
  }
  const bool overlong = (len == 2 && cp < 0x80) ||
                        (len == 3 && cp < 0x800) ||
                        (len == 4 && cp < 0x10000);
  if (overlong || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    out = kReplacement;
    return 1;
  }
  out = cp;
  return len;
}

}  // namespace

CodePointIndex::CodePointIndex(std::string_view text) : text_(text) {
  code_points_.reserve(text.size());
  byte_offsets_.reserve(text.size() + 1);
  size_t pos = 0;
  while (pos < text.size()) {
    char32_t cp;
    const size_t len = DecodeOne(text, pos, cp);
    code_points_.push_back(cp);
    byte_offsets_.push_back(pos);
    pos += len;
  }
  byte_offsets_.push_back(text.size());
}

std::string_view CodePointIndex::Slice(size_t start, size_t end) const {
  const size_t from = byte_offsets_[start];
  return text_.substr(from, byte_offsets_[end] - from);
}

size_t CodePointCount(std::string_view text) {
  size_t count = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    char32_t cp;
    pos += DecodeOne(text, pos, cp);
    ++count;
  }
  return count;
}

bool IsSpace(char32_t c) {
  switch (c) {
    case ' ':
    case '\t':
    case '\n':
    case '\r':
    case '\v':
    case '\f':
    case 0x85:
    case 0xA0:
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

bool IsPunct(char32_t c) {
  if (c < 0x80) {
    return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') ||
           (c >= '[' && c <= '`') || (c >= '{' && c <= '~');
  }
  switch (c) {
    case 0xA1:  // inverted exclamation
    case 0xAB:  // left guillemet
    case 0xBB:  // right guillemet
    case 0xBF:  // inverted question
    case 0x2013:
    case 0x2014:
    case 0x2026:  // ellipsis
      return true;
    default:
      return c >= 0x2018 && c <= 0x201F;  // curly quotes
  }
}

bool IsUpper(char32_t c) {
  return (c >= 'A' && c <= 'Z') || (c >= 0xC0 && c <= 0xDE && c != 0xD7);
}

bool IsDigit(char32_t c) { return c >= '0' && c <= '9'; }

bool IsApostrophe(char32_t c) { return c == '\'' || c == 0x2019; }

void AppendUtf8(char32_t c, std::string& out) {
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

std::string ToLower(std::string_view text) {
  const CodePointIndex index(text);
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < index.size(); ++i) {
    const char32_t c = index.at(i);
    if (IsUpper(c)) {
      AppendUtf8(c + 0x20, out);
    } else {
      out.append(index.Slice(i, i + 1));
    }
  }
  return out;
}

}  // namespace newsbreaker
