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

// Rule-based tokenization, sentence segmentation and span-preserving
// detokenization. Every attack goes through this layer so that edits can be
// traced back to character offsets in the original text.

#ifndef NEWSBREAKER_TEXT_H_
#define NEWSBREAKER_TEXT_H_

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace newsbreaker {

// Half-open interval of code point offsets.
struct Span {
  size_t start = 0;
  size_t end = 0;

  bool empty() const { return start == end; }
  size_t size() const { return end - start; }
  bool operator==(const Span&) const = default;
};

enum class TokenKind { kWord, kNumber, kPunctuation, kContractionSuffix };

const char* TokenKindName(TokenKind kind);

// A token either points into its source text (non-empty span) or was inserted
// by an edit, in which case its span is empty and marks the insertion point.
struct Token {
  std::string surface;
  Span span;
  TokenKind kind = TokenKind::kWord;

  bool inserted() const { return span.empty(); }
  bool operator==(const Token&) const = default;
};

// Token index range [begin, end) of one sentence.
struct Sentence {
  size_t begin = 0;
  size_t end = 0;

  bool operator==(const Sentence&) const = default;
};

struct Statement {
  std::string id;
  std::string text;
  std::vector<Token> tokens;
  std::vector<Sentence> sentences;
};

enum class EditKind { kInsert, kDelete, kReplace };

const char* EditKindName(EditKind kind);

// A character-level change against the original text. Spans are code point
// offsets into the original; `replacement` is spliced in verbatim.
struct Edit {
  Span span;
  std::string original;
  std::string replacement;
  EditKind kind = EditKind::kReplace;

  bool operator==(const Edit&) const = default;
};

struct Rewrite {
  std::string text;
  std::vector<Edit> edits;
};

// Abbreviations that keep their trailing period and never end a sentence.
const std::set<std::string, std::less<>>& SentenceAbbreviations();

std::vector<Token> Tokenize(std::string_view text);

std::vector<Sentence> SplitSentences(std::span<const Token> tokens,
                                     std::string_view text);

// Rebuilds text from a (possibly edited) token sequence over `text`.
//
// Untouched regions are copied verbatim, so Detokenize(Tokenize(t), t) == t.
// Where tokens were dropped the whitespace around them collapses to a single
// run; inserted tokens are joined to their neighbours with single spaces
// unless the neighbour is attached punctuation.
//
// Throws Error(kStructural) if a span is out of bounds or out of order.
std::string Detokenize(std::span<const Token> tokens, std::string_view text);

// Same as Detokenize, also reporting the minimal character-level edits that
// turn `text` into the result.
Rewrite DetokenizeWithEdits(std::span<const Token> tokens,
                            std::string_view text);

// Splices ordered, non-overlapping edits into `text`.
std::string ApplyEdits(std::string_view text, std::span<const Edit> edits);

Statement MakeStatement(std::string id, std::string text);

}  // namespace newsbreaker

#endif  // NEWSBREAKER_TEXT_H_
