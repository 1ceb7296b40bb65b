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

#include "newsbreaker/text.h"

#include <array>
#include <cctype>
#include <optional>
#include <utility>

#include "newsbreaker/error.h"
#include "newsbreaker/utf8.h"

namespace newsbreaker {
namespace {

bool IsInitialismAbbreviation(std::string_view s) {
  // Two or more "X." pairs, e.g. "D.C." or "U.K.".
  if (s.size() < 4 || s.size() % 2 != 0) return false;
  for (size_t i = 0; i < s.size(); i += 2) {
    const unsigned char letter = static_cast<unsigned char>(s[i]);
    if (!std::isalpha(letter) || s[i + 1] != '.') return false;
  }
  return true;
}

bool IsAbbreviation(std::string_view s) {
  return SentenceAbbreviations().contains(s) || IsInitialismAbbreviation(s);
}

bool EqualsIgnoreCase(char32_t c, char lower) {
  return c == static_cast<char32_t>(lower) ||
         c == static_cast<char32_t>(lower - 'a' + 'A');
}

// Length in code points of a contraction suffix ending at `end`, or 0.
size_t ContractionSuffixLength(const CodePointIndex& index, size_t begin,
                               size_t end) {
  const size_t len = end - begin;
  if (len > 3 && EqualsIgnoreCase(index.at(end - 3), 'n') &&
      IsApostrophe(index.at(end - 2)) && EqualsIgnoreCase(index.at(end - 1), 't')) {
    return 3;
  }
  static constexpr std::array<std::string_view, 6> kSuffixes = {
      "s", "re", "ve", "ll", "d", "m"};
  for (std::string_view suffix : kSuffixes) {
    const size_t suffix_len = suffix.size() + 1;
    if (len <= suffix_len) continue;
    if (!IsApostrophe(index.at(end - suffix_len))) continue;
    bool match = true;
    for (size_t k = 0; k < suffix.size(); ++k) {
      if (!EqualsIgnoreCase(index.at(end - suffix.size() + k), suffix[k])) {
        match = false;
        break;
      }
    }
    if (match) return suffix_len;
  }
  return 0;
}

TokenKind CoreKind(const CodePointIndex& index, size_t begin, size_t end) {
  bool has_digit = false;
  for (size_t i = begin; i < end; ++i) {
    const char32_t c = index.at(i);
    if (IsDigit(c)) {
      has_digit = true;
    } else if (c != '.' && c != ',' && c != ':' && c != '/' && c != '-') {
      return TokenKind::kWord;
    }
  }
  return has_digit ? TokenKind::kNumber : TokenKind::kWord;
}

void Emit(const CodePointIndex& index, size_t begin, size_t end,
          TokenKind kind, std::vector<Token>& out) {
  out.push_back(Token{std::string(index.Slice(begin, end)), {begin, end}, kind});
}

void TokenizeChunk(const CodePointIndex& index, size_t begin, size_t end,
                   std::vector<Token>& out) {
  while (begin < end && IsPunct(index.at(begin))) {
    Emit(index, begin, begin + 1, TokenKind::kPunctuation, out);
    ++begin;
  }
  std::vector<size_t> trailing;  // positions, collected right to left
  while (end > begin && IsPunct(index.at(end - 1))) {
    if (index.at(end - 1) == '.' && IsAbbreviation(index.Slice(begin, end))) {
      break;
    }
    trailing.push_back(end - 1);
    --end;
  }
  if (begin < end) {
    const size_t suffix_len = ContractionSuffixLength(index, begin, end);
    const size_t base_end = end - suffix_len;
    Emit(index, begin, base_end, CoreKind(index, begin, base_end), out);
    if (suffix_len > 0) {
      Emit(index, base_end, end, TokenKind::kContractionSuffix, out);
    }
  }
  for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) {
    Emit(index, *it, *it + 1, TokenKind::kPunctuation, out);
  }
}

bool IsTerminal(const Token& token) {
  return token.kind == TokenKind::kPunctuation &&
         (token.surface == "." || token.surface == "!" || token.surface == "?");
}

bool IsClosing(const Token& token) {
  static const std::set<std::string, std::less<>> kClosing = {
      "\"", "'", ")", "]", "}", "”", "’", "»"};
  return token.kind == TokenKind::kPunctuation &&
         (kClosing.contains(token.surface) || IsTerminal(token));
}

bool IsOpening(const Token& token) {
  static const std::set<std::string, std::less<>> kOpening = {
      "\"", "'", "(", "[", "{", "“", "‘", "«"};
  return token.kind == TokenKind::kPunctuation &&
         kOpening.contains(token.surface);
}

bool StartsUpper(const Token& token) {
  const CodePointIndex index(token.surface);
  return index.size() > 0 && IsUpper(index.at(0));
}

struct GapShape {
  bool has_content = false;
  Span leading;   // whitespace run at the start of the gap
  Span trailing;  // whitespace run at the end of the gap
};

GapShape AnalyzeGap(const CodePointIndex& index, size_t begin, size_t end) {
  GapShape shape;
  size_t first = begin;
  while (first < end && IsSpace(index.at(first))) ++first;
  shape.has_content = first < end;
  shape.leading = {begin, first};
  size_t last = end;
  while (last > first && IsSpace(index.at(last - 1))) --last;
  shape.trailing = {last, end};
  return shape;
}

struct Piece {
  std::optional<Span> copy;
  std::string literal;
};

std::vector<Piece> Layout(std::span<const Token> tokens,
                          const CodePointIndex& index) {
  enum class Prev { kNone, kOriginal, kInserted };
  std::vector<Piece> pieces;
  const auto copy = [&](Span s) { pieces.push_back(Piece{s, {}}); };
  const auto literal = [&](std::string s) {
    pieces.push_back(Piece{std::nullopt, std::move(s)});
  };

  Prev prev = Prev::kNone;
  size_t cursor = 0;
  for (const Token& token : tokens) {
    const size_t at = token.span.start;
    if (token.span.end > index.size() || token.span.start > token.span.end) {
      throw Error(ErrorCode::kStructural,
                  "token span [" + std::to_string(token.span.start) + ", " +
                      std::to_string(token.span.end) +
                      ") out of bounds for text of length " +
                      std::to_string(index.size()));
    }
    if (at < cursor) {
      throw Error(ErrorCode::kStructural,
                  "token '" + token.surface + "' at offset " +
                      std::to_string(at) + " overlaps or precedes offset " +
                      std::to_string(cursor));
    }
    const GapShape gap = AnalyzeGap(index, cursor, at);
    const Span whole{cursor, at};
    if (!token.inserted()) {
      switch (prev) {
        case Prev::kNone:
          copy(gap.has_content ? gap.leading : whole);
          break;
        case Prev::kOriginal:
          copy(gap.has_content ? gap.trailing : whole);
          break;
        case Prev::kInserted: {
          const Span sep = gap.has_content ? gap.trailing : whole;
          copy(sep);
          if (sep.empty() && token.kind != TokenKind::kPunctuation &&
              token.kind != TokenKind::kContractionSuffix) {
            literal(" ");
          }
          break;
        }
      }
      copy(token.span);
      cursor = token.span.end;
      prev = Prev::kOriginal;
    } else {
      switch (prev) {
        case Prev::kNone:
          copy(gap.has_content ? gap.leading : whole);
          break;
        case Prev::kOriginal:
          if (gap.has_content) {
            copy(gap.leading);
          } else if (whole.empty()) {
            literal(" ");
          } else {
            copy(whole);
          }
          break;
        case Prev::kInserted:
          if (!gap.has_content && !whole.empty()) {
            copy(whole);
          } else {
            literal(" ");
          }
          break;
      }
      literal(token.surface);
      cursor = at;
      prev = Prev::kInserted;
    }
  }
  const GapShape tail = AnalyzeGap(index, cursor, index.size());
  if (!tail.has_content) {
    copy({cursor, index.size()});
  } else if (prev == Prev::kNone) {
    copy(tail.leading);
  } else {
    copy(tail.trailing);
  }
  return pieces;
}

}  // namespace

const char* TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord:
      return "word";
    case TokenKind::kNumber:
      return "number";
    case TokenKind::kPunctuation:
      return "punctuation";
    case TokenKind::kContractionSuffix:
      return "contraction-suffix";
  }
  return "word";
}

const char* EditKindName(EditKind kind) {
  switch (kind) {
    case EditKind::kInsert:
      return "insert";
    case EditKind::kDelete:
      return "delete";
    case EditKind::kReplace:
      return "replace";
  }
  return "replace";
}

const std::set<std::string, std::less<>>& SentenceAbbreviations() {
  static const std::set<std::string, std::less<>> kAbbreviations = {
      "U.S.", "U.N.", "Mr.", "Mrs.", "Dr.", "Sen.", "Rep.", "Gov.", "St."};
  return kAbbreviations;
}

std::vector<Token> Tokenize(std::string_view text) {
  const CodePointIndex index(text);
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < index.size()) {
    if (IsSpace(index.at(i))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < index.size() && !IsSpace(index.at(j))) ++j;
    TokenizeChunk(index, i, j, tokens);
    i = j;
  }
  return tokens;
}

std::vector<Sentence> SplitSentences(std::span<const Token> tokens,
                                     std::string_view text) {
  const size_t text_length = CodePointCount(text);
  for (const Token& token : tokens) {
    if (token.span.end > text_length) {
      throw Error(ErrorCode::kStructural, "token span beyond end of text");
    }
  }
  std::vector<Sentence> sentences;
  const size_t n = tokens.size();
  size_t begin = 0;
  for (size_t i = 0; i < n; ++i) {
    if (!IsTerminal(tokens[i])) continue;
    size_t j = i + 1;
    while (j < n && tokens[j].span.start == tokens[j - 1].span.end &&
           IsClosing(tokens[j])) {
      ++j;
    }
    bool boundary = j == n;
    if (!boundary && tokens[j].span.start > tokens[j - 1].span.end) {
      boundary = StartsUpper(tokens[j]) ||
                 (IsOpening(tokens[j]) && j + 1 < n &&
                  StartsUpper(tokens[j + 1]));
    }
    if (boundary) {
      sentences.push_back({begin, j});
      begin = j;
    }
    i = j - 1;
  }
  if (begin < n) sentences.push_back({begin, n});
  return sentences;
}

Rewrite DetokenizeWithEdits(std::span<const Token> tokens,
                            std::string_view text) {
  const CodePointIndex index(text);
  const std::vector<Piece> pieces = Layout(tokens, index);

  Rewrite result;
  size_t position = 0;
  std::string pending;
  const auto flush = [&](size_t until) {
    if (until == position && pending.empty()) return;
    Edit edit;
    edit.span = {position, until};
    edit.original = std::string(index.Slice(position, until));
    edit.replacement = std::move(pending);
    pending.clear();
    if (edit.original.empty()) {
      edit.kind = EditKind::kInsert;
    } else if (edit.replacement.empty()) {
      edit.kind = EditKind::kDelete;
    } else {
      edit.kind = EditKind::kReplace;
    }
    result.edits.push_back(std::move(edit));
  };
  for (const Piece& piece : pieces) {
    if (!piece.copy) {
      result.text += piece.literal;
      pending += piece.literal;
      continue;
    }
    if (piece.copy->empty()) continue;
    flush(piece.copy->start);
    result.text += index.Slice(piece.copy->start, piece.copy->end);
    position = piece.copy->end;
  }
  flush(index.size());
  return result;
}

std::string Detokenize(std::span<const Token> tokens, std::string_view text) {
  return DetokenizeWithEdits(tokens, text).text;
}

std::string ApplyEdits(std::string_view text, std::span<const Edit> edits) {
  const CodePointIndex index(text);
  std::string out;
  size_t position = 0;
  for (const Edit& edit : edits) {
    if (edit.span.start < position || edit.span.end < edit.span.start ||
        edit.span.end > index.size()) {
      throw Error(ErrorCode::kStructural,
                  "edit span [" + std::to_string(edit.span.start) + ", " +
                      std::to_string(edit.span.end) +
                      ") overlaps a previous edit or leaves the text");
    }
    if (index.Slice(edit.span.start, edit.span.end) != edit.original) {
      throw Error(ErrorCode::kStructural,
                  "edit original '" + edit.original +
                      "' does not match the text at its span");
    }
    out += index.Slice(position, edit.span.start);
    out += edit.replacement;
    position = edit.span.end;
  }
  out += index.Slice(position, index.size());
  return out;
}

Statement MakeStatement(std::string id, std::string text) {
  Statement statement;
  statement.id = std::move(id);
  statement.text = std::move(text);
  statement.tokens = Tokenize(statement.text);
  statement.sentences = SplitSentences(statement.tokens, statement.text);
  return statement;
}

}  // namespace newsbreaker
