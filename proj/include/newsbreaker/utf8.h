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

// Minimal UTF-8 support. All public offsets in this project count Unicode
// scalar values, not bytes.

#ifndef NEWSBREAKER_UTF8_H_
#define NEWSBREAKER_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace newsbreaker {

// Decoded view over a UTF-8 buffer. Invalid bytes decode to U+FFFD but keep
// their own slot, so slicing by code point always reproduces the input bytes.
class CodePointIndex {
 public:
  explicit CodePointIndex(std::string_view text);

  size_t size() const { return code_points_.size(); }
  char32_t at(size_t i) const { return code_points_[i]; }
  size_t ByteOffset(size_t i) const { return byte_offsets_[i]; }
  std::string_view Slice(size_t start, size_t end) const;

 private:
  std::string_view text_;
  std::vector<char32_t> code_points_;
  std::vector<size_t> byte_offsets_;  // size() + 1 entries
};

size_t CodePointCount(std::string_view text);

bool IsSpace(char32_t c);
bool IsPunct(char32_t c);
bool IsUpper(char32_t c);
bool IsDigit(char32_t c);
bool IsApostrophe(char32_t c);

// Lowercases ASCII and Latin-1 letters; other code points pass through.
std::string ToLower(std::string_view text);

void AppendUtf8(char32_t c, std::string& out);

}  // namespace newsbreaker

#endif  // NEWSBREAKER_UTF8_H_
