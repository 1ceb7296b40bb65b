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

// Paired original/adversarial evaluation and its two metrics: the share of
// pairs whose predicted label flips and the mean change in P(fake).

#ifndef NEWSBREAKER_EVAL_H_
#define NEWSBREAKER_EVAL_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "newsbreaker/attacks.h"
#include "newsbreaker/classifier.h"
#include "newsbreaker/dataset.h"
#include "newsbreaker/protocol.h"

namespace newsbreaker {

struct PairedPrediction {
  std::string id;
  ClassProbs original_probs;
  ClassProbs modified_probs;
  Label2 original_label = Label2::kReal;
  Label2 modified_label = Label2::kReal;
  AttackKind attack = AttackKind::kNegation;
};

PairedPrediction MakePair(std::string id, AttackKind attack, ClassProbs original, ClassProbs modified);

// Both throw Error(kUndefinedMetric) for an empty input.
double LabelFlipPct(std::span<const PairedPrediction> pairs);
double DeltaProb(std::span<const PairedPrediction> pairs);

// What an attack needs besides the statement. `roster` is required for
// party reversal only.
struct AttackInputs {
  const Roster* roster = nullptr;
  AdverbLexicon lexicon = AdverbLexicon::Default();
  uint64_t seed = kDefaultSeed;
};

AttackOutcome RunAttack(AttackKind kind, const Statement& statement, const AttackInputs& inputs);

// One line of the attack interchange file.
struct AttackRecord {
  LabeledStatement statement;
  AttackKind attack = AttackKind::kNegation;
  AttackOutcome outcome;
};

std::vector<AttackRecord> GenerateAttacks(std::span<const LabeledStatement> statements, AttackKind kind,
                                          const AttackInputs& inputs);

nlohmann::ordered_json ToJson(const AttackRecord& record);
// Throws Error(kParse) on missing or inconsistent fields.
AttackRecord AttackRecordFromJson(const nlohmann::json& json);
std::string AttackRecordsToJsonl(std::span<const AttackRecord> records);
std::vector<AttackRecord> ParseAttackRecords(std::string_view contents);
std::vector<AttackRecord> ReadAttackRecords(const std::filesystem::path& path);

struct PairError {
  std::string id;
  std::string kind;
  std::string message;
};

struct AttackReport {
  AttackKind attack = AttackKind::kNegation;
  size_t n_input = 0;
  // Pairs entering the metrics: applicable, not excluded, not errored.
  size_t n_applicable = 0;
  size_t n_not_applicable = 0;
  size_t n_excluded = 0;
  size_t n_errors = 0;
  // Absent when no pair entered the metrics.
  std::optional<double> label_flip_pct;
  std::optional<double> delta_prob_mean;
  std::vector<PairedPrediction> per_pair;  // sorted by id
  std::vector<PairError> errors;           // sorted by id
};

// Queries `classifier` on both sides of every applicable, non-excluded
// record. Records must share `attack` and have distinct ids, else
// Error(kParse). Per-pair classifier failures are tallied; session-level
// protocol failures throw.
AttackReport EvaluatePairs(ClassifierClient& classifier, std::span<const AttackRecord> records,
                           AttackKind attack, const std::map<std::string, Override>& overrides);

AttackReport RunAttackEval(ClassifierClient& classifier, std::span<const LabeledStatement> statements,
                           AttackKind attack, const AttackInputs& inputs,
                           const std::map<std::string, Override>& overrides);

nlohmann::ordered_json ToJson(const AttackReport& report);

// One decimal place.
std::string FormatLabelFlip(double percent);
// Three decimal places; a nonzero value that would print as zero keeps one
// significant digit instead, e.g. -0.0001.
std::string FormatDeltaProb(double delta);

struct TableRow {
  std::string name;
  std::optional<double> label_flip_pct;
  std::optional<double> delta_prob_mean;
};

// Markdown table with columns Dataset, %LabelFlip, ΔProb.
std::string RenderTable(std::span<const TableRow> rows);

// Percentage of statements whose predicted label equals the gold label.
// Throws Error(kUndefinedMetric) when empty and ProtocolError when the
// classifier fails on any statement.
double Accuracy(ClassifierClient& classifier, std::span<const LabeledStatement> statements);

}  // namespace newsbreaker

#endif  // NEWSBREAKER_EVAL_H_
