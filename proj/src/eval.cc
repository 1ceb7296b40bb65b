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

#include "newsbreaker/eval.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "newsbreaker/error.h"
#include "newsbreaker/io.h"

namespace newsbreaker {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::string_view kOriginalSuffix = "#original";
constexpr std::string_view kModifiedSuffix = "#modified";

ordered_json ProbsJson(const ClassProbs& probs) {
  return ordered_json{{"real", probs.p_real}, {"fake", probs.p_fake}};
}

EditKind ParseEditKindOrThrow(const std::string& name) {
  for (EditKind kind : {EditKind::kInsert, EditKind::kDelete, EditKind::kReplace}) {
    if (name == EditKindName(kind)) return kind;
  }
  throw Error(ErrorCode::kParse, "unknown edit kind '" + name + "'");
}

template <typename T>
T Field(const json& object, const char* key, const std::string& id) {
  auto it = object.find(key);
  if (it == object.end()) throw Error(ErrorCode::kParse, "record " + id + ": missing '" + key + "'");
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::kParse, "record " + id + ": field '" + key + "' has the wrong type");
  }
}

std::string Printf(const char* format, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), format, value);
  std::string out = buffer;
  if (out.rfind("-", 0) == 0 && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

}  // namespace

PairedPrediction MakePair(std::string id, AttackKind attack, ClassProbs original, ClassProbs modified) {
  return {std::move(id), original, modified, original.Predicted(), modified.Predicted(), attack};
}

double LabelFlipPct(std::span<const PairedPrediction> pairs) {
  if (pairs.empty()) throw Error(ErrorCode::kUndefinedMetric, "label flip over zero pairs");
  const auto flips = std::count_if(pairs.begin(), pairs.end(), [](const PairedPrediction& p) {
    return p.original_label != p.modified_label;
  });
  return 100.0 * static_cast<double>(flips) / static_cast<double>(pairs.size());
}

double DeltaProb(std::span<const PairedPrediction> pairs) {
  if (pairs.empty()) throw Error(ErrorCode::kUndefinedMetric, "probability change over zero pairs");
  double sum = 0.0;
  for (const PairedPrediction& p : pairs) sum += p.modified_probs.p_fake - p.original_probs.p_fake;
  return sum / static_cast<double>(pairs.size());
}

AttackOutcome RunAttack(AttackKind kind, const Statement& statement, const AttackInputs& inputs) {
  switch (kind) {
    case AttackKind::kNegation:
      return Negate(statement);
    case AttackKind::kPartyReversal:
      if (inputs.roster == nullptr) {
        throw Error(ErrorCode::kInvalidArgument, "party reversal needs a roster");
      }
      return ReverseParty(statement, *inputs.roster, inputs.seed);
    case AttackKind::kAdverbIntensity:
      return ReduceIntensity(statement, inputs.lexicon);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown attack");
}

std::vector<AttackRecord> GenerateAttacks(std::span<const LabeledStatement> statements, AttackKind kind,
                                          const AttackInputs& inputs) {
  std::vector<AttackRecord> records;
  records.reserve(statements.size());
  for (const LabeledStatement& labeled : statements) {
    const Statement statement = MakeStatement(labeled.id, labeled.text);
    records.push_back({labeled, kind, RunAttack(kind, statement, inputs)});
  }
  return records;
}

ordered_json ToJson(const AttackRecord& record) {
  ordered_json out = ToJson(record.statement);
  out["attack"] = AttackKindName(record.attack);
  out["applicable"] = record.outcome.applicable;
  out["modified_text"] = record.outcome.modified_text;
  ordered_json edits = ordered_json::array();
  for (const Edit& edit : record.outcome.edits) {
    edits.push_back(ordered_json{{"start", edit.span.start},
                                 {"end", edit.span.end},
                                 {"original", edit.original},
                                 {"replacement", edit.replacement},
                                 {"kind", EditKindName(edit.kind)}});
  }
  out["edits"] = std::move(edits);
  out["skip_reason"] = record.outcome.skip_reason ? ordered_json(*record.outcome.skip_reason) : ordered_json();
  return out;
}

AttackRecord AttackRecordFromJson(const json& object) {
  AttackRecord record;
  record.statement = LabeledStatementFromJson(object);
  const std::string& id = record.statement.id;
  const auto attack = ParseAttackKind(Field<std::string>(object, "attack", id));
  if (!attack) throw Error(ErrorCode::kParse, "record " + id + ": unknown attack");
  record.attack = *attack;
  record.outcome.applicable = Field<bool>(object, "applicable", id);
  record.outcome.modified_text = Field<std::string>(object, "modified_text", id);
  for (const json& edit : Field<json>(object, "edits", id)) {
    record.outcome.edits.push_back({{Field<size_t>(edit, "start", id), Field<size_t>(edit, "end", id)},
                                    Field<std::string>(edit, "original", id),
                                    Field<std::string>(edit, "replacement", id),
                                    ParseEditKindOrThrow(Field<std::string>(edit, "kind", id))});
  }
  if (auto it = object.find("skip_reason"); it != object.end() && !it->is_null()) {
    record.outcome.skip_reason = Field<std::string>(object, "skip_reason", id);
  }

  const std::string& text = record.statement.text;
  if (!record.outcome.applicable &&
      (record.outcome.modified_text != text || !record.outcome.edits.empty())) {
    throw Error(ErrorCode::kParse, "record " + id + ": non-applicable record modifies the text");
  }
  std::string rebuilt;
  try {
    rebuilt = ApplyEdits(text, record.outcome.edits);
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, "record " + id + ": " + e.what());
  }
  if (rebuilt != record.outcome.modified_text) {
    throw Error(ErrorCode::kParse, "record " + id + ": edits do not reproduce modified_text");
  }
  return record;
}

std::string AttackRecordsToJsonl(std::span<const AttackRecord> records) {
  std::string out;
  for (const AttackRecord& record : records) {
    out += DumpJsonLine(ToJson(record));
    out += '\n';
  }
  return out;
}

std::vector<AttackRecord> ParseAttackRecords(std::string_view contents) {
  std::vector<AttackRecord> records;
  size_t line_number = 0;
  size_t pos = 0;
  while (pos < contents.size()) {
    size_t end = contents.find('\n', pos);
    if (end == std::string_view::npos) end = contents.size();
    const std::string_view line = contents.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      records.push_back(AttackRecordFromJson(json::parse(line)));
    } catch (const std::exception& e) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  return records;
}

std::vector<AttackRecord> ReadAttackRecords(const std::filesystem::path& path) {
  try {
    return ParseAttackRecords(ReadFileToString(path));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kParse) throw;
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
}

AttackReport EvaluatePairs(ClassifierClient& classifier, std::span<const AttackRecord> records,
                           AttackKind attack, const std::map<std::string, Override>& overrides) {
  AttackReport report;
  report.attack = attack;
  report.n_input = records.size();

  std::set<std::string_view> ids;
  std::vector<std::pair<std::string, AttackOutcome>> outcomes;
  std::map<std::string, const AttackRecord*> by_id;
  for (const AttackRecord& record : records) {
    if (record.attack != attack) {
      throw Error(ErrorCode::kParse, "record " + record.statement.id + " holds a " +
                                         AttackKindName(record.attack) + " attack, expected " +
                                         AttackKindName(attack));
    }
    if (!ids.insert(record.statement.id).second) {
      throw Error(ErrorCode::kParse, "duplicate statement id '" + record.statement.id + "'");
    }
    outcomes.emplace_back(record.statement.id, record.outcome);
    by_id.emplace(record.statement.id, &record);
  }
  FilterResult filtered = ApplyFilter(std::move(outcomes), overrides);
  report.n_not_applicable = filtered.not_applicable;
  report.n_excluded = filtered.excluded;

  std::vector<PredictRequest> requests;
  requests.reserve(2 * filtered.kept.size());
  for (const auto& [id, outcome] : filtered.kept) {
    requests.push_back({id + std::string(kOriginalSuffix), by_id.at(id)->statement.text, false});
    requests.push_back({id + std::string(kModifiedSuffix), outcome.modified_text, false});
  }
  const std::vector<PredictResult> results =
      requests.empty() ? std::vector<PredictResult>{} : classifier.PredictBatch(requests);

  for (size_t i = 0; i < filtered.kept.size(); ++i) {
    const std::string& id = filtered.kept[i].first;
    const PredictResult& original = results[2 * i];
    const PredictResult& modified = results[2 * i + 1];
    if (!original.ok() || !modified.ok()) {
      const PredictResult& bad = original.ok() ? modified : original;
      report.errors.push_back(
          {id, bad.error_kind ? ProtocolErrorKindName(*bad.error_kind) : "unknown", bad.error});
      continue;
    }
    report.per_pair.push_back(MakePair(id, attack, original.response->probs, modified.response->probs));
  }
  auto by_pair_id = [](const auto& a, const auto& b) { return a.id < b.id; };
  std::sort(report.per_pair.begin(), report.per_pair.end(), by_pair_id);
  std::sort(report.errors.begin(), report.errors.end(), by_pair_id);
  report.n_errors = report.errors.size();
  report.n_applicable = report.per_pair.size();
  if (!report.per_pair.empty()) {
    report.label_flip_pct = LabelFlipPct(report.per_pair);
    report.delta_prob_mean = DeltaProb(report.per_pair);
  }
  return report;
}

AttackReport RunAttackEval(ClassifierClient& classifier, std::span<const LabeledStatement> statements,
                           AttackKind attack, const AttackInputs& inputs,
                           const std::map<std::string, Override>& overrides) {
  const std::vector<AttackRecord> records = GenerateAttacks(statements, attack, inputs);
  return EvaluatePairs(classifier, records, attack, overrides);
}

ordered_json ToJson(const AttackReport& report) {
  ordered_json out;
  out["attack"] = AttackKindName(report.attack);
  out["n_input"] = report.n_input;
  out["n_applicable"] = report.n_applicable;
  out["n_not_applicable"] = report.n_not_applicable;
  out["n_excluded"] = report.n_excluded;
  out["n_errors"] = report.n_errors;
  out["label_flip_pct"] = report.label_flip_pct ? ordered_json(*report.label_flip_pct) : ordered_json();
  out["delta_prob_mean"] = report.delta_prob_mean ? ordered_json(*report.delta_prob_mean) : ordered_json();
  ordered_json pairs = ordered_json::array();
  for (const PairedPrediction& pair : report.per_pair) {
    pairs.push_back(ordered_json{{"id", pair.id},
                                 {"original_probs", ProbsJson(pair.original_probs)},
                                 {"modified_probs", ProbsJson(pair.modified_probs)},
                                 {"original_label", Label2Name(pair.original_label)},
                                 {"modified_label", Label2Name(pair.modified_label)}});
  }
  out["per_pair"] = std::move(pairs);
  ordered_json errors = ordered_json::array();
  for (const PairError& error : report.errors) {
    errors.push_back(ordered_json{{"id", error.id}, {"kind", error.kind}, {"message", error.message}});
  }
  out["errors"] = std::move(errors);
  return out;
}

std::string FormatLabelFlip(double percent) { return Printf("%.1f", percent); }

std::string FormatDeltaProb(double delta) {
  if (delta != 0.0 && std::fabs(delta) < 0.0005) {
    for (int digits = 4; digits <= 6; ++digits) {
      const std::string format = "%." + std::to_string(digits) + "f";
      const std::string out = Printf(format.c_str(), delta);
      if (out.find_first_not_of("-0.") != std::string::npos) return out;
    }
  }
  return Printf("%.3f", delta);
}

std::string RenderTable(std::span<const TableRow> rows) {
  std::string out = "| Dataset | %LabelFlip | ΔProb |\n|---|---:|---:|\n";
  for (const TableRow& row : rows) {
    out += "| " + row.name + " | ";
    out += row.label_flip_pct ? FormatLabelFlip(*row.label_flip_pct) : "n/a";
    out += " | ";
    out += row.delta_prob_mean ? FormatDeltaProb(*row.delta_prob_mean) : "n/a";
    out += " |\n";
  }
  return out;
}

double Accuracy(ClassifierClient& classifier, std::span<const LabeledStatement> statements) {
  if (statements.empty()) throw Error(ErrorCode::kUndefinedMetric, "accuracy over zero statements");
  std::vector<PredictRequest> requests;
  requests.reserve(statements.size());
  for (const LabeledStatement& s : statements) requests.push_back({s.id, s.text, false});
  const std::vector<PredictResult> results = classifier.PredictBatch(requests);
  size_t correct = 0;
  for (size_t i = 0; i < results.size(); ++i) {
    if (!results[i].ok()) {
      throw ProtocolError(results[i].error_kind.value_or(ProtocolErrorKind::kServerError),
                          "statement " + results[i].id + ": " + results[i].error);
    }
    if (results[i].response->probs.Predicted() == statements[i].label2) ++correct;
  }
  return 100.0 * static_cast<double>(correct) / static_cast<double>(statements.size());
}

}  // namespace newsbreaker
