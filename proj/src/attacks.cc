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

#include "newsbreaker/attacks.h"

#include <cctype>

#include "newsbreaker/error.h"
#include "newsbreaker/io.h"
#include "newsbreaker/random.h"
#include "newsbreaker/utf8.h"

namespace newsbreaker {
namespace {

// Collects token deletions and insertions against one statement and renders
// them through DetokenizeWithEdits.
class TokenEditor {
 public:
  explicit TokenEditor(const Statement& statement)
      : statement_(statement), deleted_(statement.tokens.size(), false) {}

  void Delete(size_t i) { deleted_[i] = true; }

  void InsertAfter(size_t i, std::string surface) {
    inserted_after_[i].push_back(std::move(surface));
  }

  // Replaces tokens [begin, end) with `surfaces`.
  void Replace(size_t begin, size_t end, std::vector<std::string> surfaces) {
    for (size_t i = begin; i < end; ++i) deleted_[i] = true;
    auto& slot = inserted_after_[end - 1];
    for (std::string& s : surfaces) slot.push_back(std::move(s));
  }

  Rewrite Build() const {
    std::vector<Token> tokens;
    tokens.reserve(statement_.tokens.size());
    for (size_t i = 0; i < statement_.tokens.size(); ++i) {
      const Token& token = statement_.tokens[i];
      if (!deleted_[i]) tokens.push_back(token);
      if (auto it = inserted_after_.find(i); it != inserted_after_.end()) {
        const size_t anchor = token.span.end;
        for (const std::string& surface : it->second) {
          tokens.push_back(Token{surface, {anchor, anchor}, TokenKind::kWord});
        }
      }
    }
    return DetokenizeWithEdits(tokens, statement_.text);
  }

 private:
  const Statement& statement_;
  std::vector<bool> deleted_;
  std::map<size_t, std::vector<std::string>> inserted_after_;
};

AttackOutcome NotApplicable(const Statement& statement, std::string reason) {
  AttackOutcome outcome;
  outcome.applicable = false;
  outcome.modified_text = statement.text;
  outcome.skip_reason = std::move(reason);
  return outcome;
}

AttackOutcome FromEditor(const Statement& statement, const TokenEditor& editor,
                         std::string reason_if_unchanged) {
  Rewrite rewrite = editor.Build();
  if (rewrite.edits.empty()) {
    return NotApplicable(statement, std::move(reason_if_unchanged));
  }
  AttackOutcome outcome;
  outcome.applicable = true;
  outcome.modified_text = std::move(rewrite.text);
  outcome.edits = std::move(rewrite.edits);
  return outcome;
}

std::string AsciiUpper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

// Copies the casing pattern of `model` ("CAN'T", "Can't", "can't") onto
// the lowercase word `word`.
std::string MatchCase(std::string word, std::string_view model) {
  const CodePointIndex index(model);
  if (index.size() == 0 || !IsUpper(index.at(0))) return word;
  bool all_upper = index.size() > 1;
  for (size_t i = 0; i < index.size(); ++i) {
    if (!IsUpper(index.at(i))) all_upper = false;
  }
  if (all_upper) return AsciiUpper(std::move(word));
  word[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[0])));
  return word;
}

bool IsNegationSuffix(const Token& token) {
  if (token.kind != TokenKind::kContractionSuffix) return false;
  const std::string lower = ToLower(token.surface);
  return lower == "n't" || lower == "n’t";
}

std::vector<std::string> Surfaces(std::string_view text) {
  std::vector<std::string> out;
  for (Token& token : Tokenize(text)) out.push_back(std::move(token.surface));
  return out;
}

std::string Trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Calls fn(line_number, trimmed_line) for each non-blank, non-comment line.
template <typename Fn>
void ForEachDataLine(std::string_view contents, Fn fn) {
  size_t line_number = 0;
  size_t pos = 0;
  while (pos <= contents.size()) {
    size_t end = contents.find('\n', pos);
    if (end == std::string_view::npos) end = contents.size();
    ++line_number;
    const std::string line = Trim(contents.substr(pos, end - pos));
    if (!line.empty() && line[0] != '#') fn(line_number, line);
    if (end == contents.size()) break;
    pos = end + 1;
  }
}

std::string LineError(std::string what, size_t line) {
  return what + " at line " + std::to_string(line);
}

}  // namespace

const char* AttackKindName(AttackKind kind) {
  switch (kind) {
    case AttackKind::kNegation:
      return "negation";
    case AttackKind::kPartyReversal:
      return "party";
    case AttackKind::kAdverbIntensity:
      return "adverb";
  }
  return "negation";
}

std::optional<AttackKind> ParseAttackKind(std::string_view name) {
  if (name == "negation") return AttackKind::kNegation;
  if (name == "party") return AttackKind::kPartyReversal;
  if (name == "adverb") return AttackKind::kAdverbIntensity;
  return std::nullopt;
}

const char* PartyName(Party party) {
  return party == Party::kDemocrat ? "D" : "R";
}

Roster::Roster(std::vector<RosterEntry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorCode::kParse, "roster is empty");
  std::set<std::string> names;
  bool has_democrat = false;
  bool has_republican = false;
  for (const RosterEntry& entry : entries_) {
    if (Tokenize(entry.full_name).empty()) {
      throw Error(ErrorCode::kParse, "roster entry with empty name");
    }
    if (!names.insert(entry.full_name).second) {
      throw Error(ErrorCode::kParse, "duplicate name '" + entry.full_name + "'");
    }
    (entry.party == Party::kDemocrat ? has_democrat : has_republican) = true;
  }
  if (!has_democrat) throw Error(ErrorCode::kParse, "roster has no Democrat entry");
  if (!has_republican) {
    throw Error(ErrorCode::kParse, "roster has no Republican entry");
  }
}

AdverbLexicon::AdverbLexicon(std::set<std::string> adverbs) {
  for (const std::string& adverb : adverbs) {
    const std::vector<Token> tokens = Tokenize(adverb);
    if (tokens.size() != 1 || tokens[0].kind != TokenKind::kWord) {
      throw Error(ErrorCode::kParse,
                  "lexicon entry '" + adverb + "' is not a single word");
    }
    adverbs_.insert(ToLower(adverb));
  }
  if (adverbs_.empty()) throw Error(ErrorCode::kParse, "adverb lexicon is empty");
}

AdverbLexicon AdverbLexicon::Default() {
  return AdverbLexicon({"totally", "absolutely", "completely", "extremely",
                        "utterly", "really", "very", "incredibly", "insanely",
                        "literally", "positively"});
}

const std::set<std::string, std::less<>>& NegationAuxiliaries() {
  static const std::set<std::string, std::less<>> kAux = {
      "is",    "are",   "was",    "were",  "am",   "be",     "been", "has",
      "have",  "had",   "do",     "does",  "did",  "can",    "could", "will",
      "would", "shall", "should", "may",   "might", "must"};
  return kAux;
}

AttackOutcome Negate(const Statement& statement) {
  // Contraction bases whose full form differs: "can't" -> "ca" + "n't".
  static const std::map<std::string, std::string, std::less<>> kFusedBases = {
      {"ca", "can"}, {"wo", "will"}, {"sha", "shall"}};

  const std::vector<Token>& tokens = statement.tokens;
  TokenEditor editor(statement);
  for (const Sentence& sentence : statement.sentences) {
    for (size_t i = sentence.begin; i < sentence.end; ++i) {
      const Token& token = tokens[i];
      if (token.kind != TokenKind::kWord) continue;
      const std::string lower = ToLower(token.surface);
      const Token* next = i + 1 < sentence.end ? &tokens[i + 1] : nullptr;
      const bool next_is_suffix = next != nullptr && IsNegationSuffix(*next);

      if (lower == "cannot") {
        editor.Replace(i, i + 1, {MatchCase("can", token.surface)});
        break;
      }
      if (next_is_suffix) {
        if (auto fused = kFusedBases.find(lower); fused != kFusedBases.end()) {
          editor.Replace(i, i + 1, {MatchCase(fused->second, token.surface)});
          editor.Delete(i + 1);
          break;
        }
      }
      if (!NegationAuxiliaries().contains(lower)) continue;
      if (next_is_suffix) {
        editor.Delete(i + 1);
      } else if (next != nullptr && next->kind == TokenKind::kWord &&
                 ToLower(next->surface) == "not") {
        editor.Delete(i + 1);
      } else {
        editor.InsertAfter(i, "not");
      }
      break;
    }
  }
  return FromEditor(statement, editor, "no auxiliary found");
}

AttackOutcome ReverseParty(const Statement& statement, const Roster& roster,
                           uint64_t seed) {
  const std::vector<RosterEntry>& entries = roster.entries();
  std::vector<std::vector<std::string>> name_tokens;
  std::map<std::string, size_t> surname_count;
  for (const RosterEntry& entry : entries) {
    name_tokens.push_back(Surfaces(entry.full_name));
    ++surname_count[name_tokens.back().back()];
  }
  std::map<std::string, size_t, std::less<>> unique_surnames;
  for (size_t e = 0; e < entries.size(); ++e) {
    const std::string& surname = name_tokens[e].back();
    if (surname_count[surname] == 1) unique_surnames[surname] = e;
  }

  struct Mention {
    size_t begin;
    size_t end;
    size_t entry;
    bool full;
  };
  std::vector<Mention> mentions;
  const std::vector<Token>& tokens = statement.tokens;
  for (size_t i = 0; i < tokens.size();) {
    size_t best_entry = entries.size();
    size_t best_len = 0;
    for (size_t e = 0; e < entries.size(); ++e) {
      const auto& name = name_tokens[e];
      if (name.size() <= best_len || i + name.size() > tokens.size()) continue;
      bool match = true;
      for (size_t k = 0; k < name.size(); ++k) {
        if (tokens[i + k].surface != name[k]) {
          match = false;
          break;
        }
      }
      if (match) {
        best_entry = e;
        best_len = name.size();
      }
    }
    if (best_len > 0) {
      mentions.push_back({i, i + best_len, best_entry, true});
      i += best_len;
      continue;
    }
    if (tokens[i].kind == TokenKind::kWord) {
      if (auto it = unique_surnames.find(tokens[i].surface);
          it != unique_surnames.end()) {
        mentions.push_back({i, i + 1, it->second, false});
      }
    }
    ++i;
  }
  if (mentions.empty()) {
    return NotApplicable(statement, "no roster name found");
  }

  // Draw one replacement per distinct politician, in order of first mention.
  Rng rng(DeriveKey(seed, statement.id));
  std::map<size_t, size_t> replacement_for;
  for (const Mention& mention : mentions) {
    if (replacement_for.contains(mention.entry)) continue;
    const RosterEntry& original = entries[mention.entry];
    const std::string& surname = name_tokens[mention.entry].back();
    std::vector<size_t> pool;
    for (size_t e = 0; e < entries.size(); ++e) {
      if (entries[e].party != original.party && name_tokens[e].back() != surname) {
        pool.push_back(e);
      }
    }
    if (pool.empty()) {
      return NotApplicable(statement, "no opposite-party candidates");
    }
    replacement_for[mention.entry] = pool[rng.UniformInt(pool.size())];
  }

  TokenEditor editor(statement);
  for (const Mention& mention : mentions) {
    const size_t replacement = replacement_for[mention.entry];
    if (mention.full) {
      editor.Replace(mention.begin, mention.end, name_tokens[replacement]);
    } else {
      editor.Replace(mention.begin, mention.end,
                     {name_tokens[replacement].back()});
    }
  }
  return FromEditor(statement, editor, "no roster name found");
}

AttackOutcome ReduceIntensity(const Statement& statement,
                              const AdverbLexicon& lexicon) {
  TokenEditor editor(statement);
  for (size_t i = 0; i < statement.tokens.size(); ++i) {
    const Token& token = statement.tokens[i];
    if (token.kind == TokenKind::kWord && lexicon.contains(ToLower(token.surface))) {
      editor.Delete(i);
    }
  }
  return FromEditor(statement, editor, "no intensifier found");
}

Roster ParseRoster(std::string_view contents) {
  std::vector<RosterEntry> entries;
  std::map<std::string, size_t> seen;
  ForEachDataLine(contents, [&](size_t line, const std::string& text) {
    const size_t comma = text.rfind(',');
    if (comma == std::string::npos) {
      throw Error(ErrorCode::kParse, LineError("missing party column", line));
    }
    RosterEntry entry;
    entry.full_name = Trim(std::string_view(text).substr(0, comma));
    const std::string party = Trim(std::string_view(text).substr(comma + 1));
    if (party == "D") {
      entry.party = Party::kDemocrat;
    } else if (party == "R") {
      entry.party = Party::kRepublican;
    } else {
      throw Error(ErrorCode::kParse,
                  LineError("unknown party '" + party + "'", line));
    }
    if (entry.full_name.empty()) {
      throw Error(ErrorCode::kParse, LineError("empty name", line));
    }
    if (auto [it, inserted] = seen.emplace(entry.full_name, line); !inserted) {
      throw Error(ErrorCode::kParse,
                  LineError("duplicate name '" + entry.full_name +
                                "' (first seen at line " +
                                std::to_string(it->second) + ")",
                            line));
    }
    entries.push_back(std::move(entry));
  });
  if (entries.empty()) throw Error(ErrorCode::kParse, "roster is empty");
  return Roster(std::move(entries));
}

Roster LoadRoster(const std::filesystem::path& path) {
  try {
    return ParseRoster(ReadFileToString(path));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kParse) throw;
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
}

AdverbLexicon ParseLexicon(std::string_view contents) {
  std::set<std::string> adverbs;
  ForEachDataLine(contents, [&](size_t line, const std::string& text) {
    if (Tokenize(text).size() != 1) {
      throw Error(ErrorCode::kParse,
                  LineError("lexicon entry '" + text + "' is not one word", line));
    }
    adverbs.insert(ToLower(text));
  });
  return AdverbLexicon(std::move(adverbs));
}

AdverbLexicon LoadLexicon(const std::filesystem::path& path) {
  return ParseLexicon(ReadFileToString(path));
}

std::map<std::string, Override> ParseOverrides(std::string_view contents) {
  std::map<std::string, Override> overrides;
  ForEachDataLine(contents, [&](size_t line, const std::string& text) {
    const size_t comma = text.rfind(',');
    if (comma == std::string::npos) {
      throw Error(ErrorCode::kParse, LineError("missing action column", line));
    }
    const std::string id = Trim(std::string_view(text).substr(0, comma));
    const std::string action = Trim(std::string_view(text).substr(comma + 1));
    if (action == "include") {
      overrides[id] = Override::kInclude;
    } else if (action == "exclude") {
      overrides[id] = Override::kExclude;
    } else {
      throw Error(ErrorCode::kParse,
                  LineError("unknown override '" + action + "'", line));
    }
  });
  return overrides;
}

std::map<std::string, Override> LoadOverrides(const std::filesystem::path& path) {
  return ParseOverrides(ReadFileToString(path));
}

FilterResult ApplyFilter(
    std::vector<std::pair<std::string, AttackOutcome>> outcomes,
    const std::map<std::string, Override>& overrides) {
  FilterResult result;
  for (auto& [id, outcome] : outcomes) {
    const auto it = overrides.find(id);
    if (it != overrides.end() && it->second == Override::kExclude) {
      ++result.excluded;
    } else if (!outcome.applicable) {
      ++result.not_applicable;
    } else {
      result.kept.emplace_back(std::move(id), std::move(outcome));
    }
  }
  return result;
}

}  // namespace newsbreaker
