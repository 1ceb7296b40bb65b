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

// The three adversarial rewrites: sentence negation, political party
// reversal and intensifier removal. Each is a pure function from a tokenized
// statement to an AttackOutcome carrying character-level edit provenance.

#ifndef NEWSBREAKER_ATTACKS_H_
#define NEWSBREAKER_ATTACKS_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "newsbreaker/text.h"

namespace newsbreaker {

enum class AttackKind { kNegation, kPartyReversal, kAdverbIntensity };

// "negation", "party", "adverb".
const char* AttackKindName(AttackKind kind);
std::optional<AttackKind> ParseAttackKind(std::string_view name);

struct AttackOutcome {
  bool applicable = false;
  std::string modified_text;
  std::vector<Edit> edits;
  std::optional<std::string> skip_reason;
};

enum class Party { kDemocrat, kRepublican };

const char* PartyName(Party party);

struct RosterEntry {
  std::string full_name;
  Party party = Party::kDemocrat;
};

// Politician gazetteer. Names are unique and both parties are present.
class Roster {
 public:
  // Throws Error(kParse) when the invariants do not hold.
  explicit Roster(std::vector<RosterEntry> entries);

  const std::vector<RosterEntry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

 private:
  std::vector<RosterEntry> entries_;
};

class AdverbLexicon {
 public:
  // Entries are lowercased. Throws Error(kParse) if empty or if an entry
  // does not tokenize to a single word.
  explicit AdverbLexicon(std::set<std::string> adverbs);

  static AdverbLexicon Default();

  bool contains(std::string_view lowercase_word) const {
    return adverbs_.contains(std::string(lowercase_word));
  }
  const std::set<std::string>& adverbs() const { return adverbs_; }

 private:
  std::set<std::string> adverbs_;
};

// Auxiliary and linking verbs toggled by Negate.
const std::set<std::string, std::less<>>& NegationAuxiliaries();

// For each sentence, toggles negation at the first auxiliary: "is" becomes
// "is not", "is not" / "isn't" become "is", "cannot" becomes "can".
AttackOutcome Negate(const Statement& statement);

// Replaces each politician mention with a seeded draw from the opposite
// party. Full names match longest-first; bare surnames match only when the
// surname is unique in the roster. Draws are keyed by (seed, statement id).
AttackOutcome ReverseParty(const Statement& statement, const Roster& roster,
                           uint64_t seed);

// Deletes every token whose lowercase surface is in the lexicon.
AttackOutcome ReduceIntensity(const Statement& statement,
                              const AdverbLexicon& lexicon);

// Roster file: "Full Name,D" or "Full Name,R" per line; '#' comments.
Roster ParseRoster(std::string_view contents);
Roster LoadRoster(const std::filesystem::path& path);

// One lowercase adverb per line; blank lines and '#' comments ignored.
AdverbLexicon ParseLexicon(std::string_view contents);
AdverbLexicon LoadLexicon(const std::filesystem::path& path);

enum class Override { kInclude, kExclude };

// "id,include" or "id,exclude" per line.
std::map<std::string, Override> ParseOverrides(std::string_view contents);
std::map<std::string, Override> LoadOverrides(const std::filesystem::path& path);

struct FilterResult {
  std::vector<std::pair<std::string, AttackOutcome>> kept;
  size_t not_applicable = 0;
  size_t excluded = 0;
};

// Keeps outcomes that are applicable and not excluded by `overrides`. An
// "include" override never resurrects a non-applicable outcome.
FilterResult ApplyFilter(
    std::vector<std::pair<std::string, AttackOutcome>> outcomes,
    const std::map<std::string, Override>& overrides);

}  // namespace newsbreaker

#endif  // NEWSBREAKER_ATTACKS_H_
