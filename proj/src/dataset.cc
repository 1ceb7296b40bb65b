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

#include "newsbreaker/dataset.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

#include "newsbreaker/error.h"

namespace newsbreaker {
namespace {

std::string Lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string_view StripCr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t pos = 0;
  while (true) {
    const size_t tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

// Records a bad input row: throws in strict mode, otherwise counts it.
void Reject(LoadReport& report, bool strict, std::string message) {
  if (strict) throw Error(ErrorCode::kParse, message);
  ++report.skipped;
  report.diagnostics.push_back(std::move(message));
}

struct CsvRecord {
  std::vector<std::string> fields;
  size_t line = 0;  // 1-based line where the record starts
};

// Parses one RFC 4180 record starting at `pos`; advances `pos` and `line`.
CsvRecord ParseCsvRecord(std::string_view contents, size_t& pos, size_t& line) {
  CsvRecord record;
  record.line = line;
  std::string field;
  bool in_quotes = false;
  bool was_quoted = false;
  while (pos < contents.size()) {
    const char c = contents[pos];
    if (in_quotes) {
      if (c == '"') {
        if (pos + 1 < contents.size() && contents[pos + 1] == '"') {
          field.push_back('"');
          pos += 2;
          continue;
        }
        in_quotes = false;
        ++pos;
        continue;
      }
      if (c == '\n') ++line;
      field.push_back(c);
      ++pos;
      continue;
    }
    if (c == '"' && field.empty() && !was_quoted) {
      in_quotes = true;
      was_quoted = true;
      ++pos;
    } else if (c == ',') {
      record.fields.push_back(std::move(field));
      field.clear();
      was_quoted = false;
      ++pos;
    } else if (c == '\r' && pos + 1 < contents.size() && contents[pos + 1] == '\n') {
      ++pos;
    } else if (c == '\n') {
      ++pos;
      ++line;
      record.fields.push_back(std::move(field));
      return record;
    } else {
      field.push_back(c);
      ++pos;
    }
  }
  if (in_quotes) {
    throw Error(ErrorCode::kParse, "unterminated quoted field in record starting at line " +
                                       std::to_string(record.line));
  }
  record.fields.push_back(std::move(field));
  return record;
}

std::vector<CsvRecord> ParseCsvRecords(std::string_view contents) {
  std::vector<CsvRecord> records;
  size_t pos = 0;
  size_t line = 1;
  while (pos < contents.size()) {
    CsvRecord record = ParseCsvRecord(contents, pos, line);
    if (record.fields.size() == 1 && record.fields[0].empty()) continue;
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace

const char* Label6Name(Label6 label) {
  switch (label) {
    case Label6::kTrue:
      return "true";
    case Label6::kMostlyTrue:
      return "mostly-true";
    case Label6::kHalfTrue:
      return "half-true";
    case Label6::kBarelyTrue:
      return "barely-true";
    case Label6::kFalse:
      return "false";
    case Label6::kPantsOnFire:
      return "pants-fire";
  }
  return "false";
}

std::optional<Label6> ParseLabel6(std::string_view name) {
  static const std::map<std::string, Label6, std::less<>> kNames = {
      {"true", Label6::kTrue},
      {"mostly-true", Label6::kMostlyTrue},
      {"half-true", Label6::kHalfTrue},
      {"barely-true", Label6::kBarelyTrue},
      {"false", Label6::kFalse},
      {"pants-fire", Label6::kPantsOnFire}};
  const auto it = kNames.find(Lowercase(name));
  if (it == kNames.end()) return std::nullopt;
  return it->second;
}

const char* Label2Name(Label2 label) {
  return label == Label2::kReal ? "real" : "fake";
}

std::optional<Label2> ParseLabel2(std::string_view name) {
  const std::string lower = Lowercase(name);
  if (lower == "real") return Label2::kReal;
  if (lower == "fake") return Label2::kFake;
  return std::nullopt;
}

const char* SourceName(Source source) {
  switch (source) {
    case Source::kLiar:
      return "liar";
    case Source::kKaggle:
      return "kaggle";
    case Source::kOther:
      return "other";
  }
  return "other";
}

std::optional<Source> ParseSource(std::string_view name) {
  if (name == "liar") return Source::kLiar;
  if (name == "kaggle") return Source::kKaggle;
  if (name == "other") return Source::kOther;
  return std::nullopt;
}

Label2 CollapseLabel(Label6 label) {
  switch (label) {
    case Label6::kTrue:
    case Label6::kMostlyTrue:
    case Label6::kHalfTrue:
      return Label2::kReal;
    case Label6::kBarelyTrue:
    case Label6::kFalse:
    case Label6::kPantsOnFire:
      return Label2::kFake;
  }
  return Label2::kFake;
}

LoadReport ParseLiar(std::string_view contents, const LiarOptions& options) {
  const size_t needed =
      std::max({options.id_column, options.label_column, options.text_column}) + 1;
  LoadReport report;
  size_t line_number = 0;
  size_t pos = 0;
  while (pos < contents.size()) {
    size_t end = contents.find('\n', pos);
    if (end == std::string_view::npos) end = contents.size();
    const std::string_view line = StripCr(contents.substr(pos, end - pos));
    pos = end + 1;
    ++line_number;
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    const std::vector<std::string_view> fields = SplitTabs(line);
    if (fields.size() < needed) {
      Reject(report, options.strict,
             "line " + std::to_string(line_number) + ": expected at least " +
                 std::to_string(needed) + " tab-separated columns, found " +
                 std::to_string(fields.size()));
      continue;
    }
    const std::optional<Label6> label = ParseLabel6(fields[options.label_column]);
    if (!label) {
      Reject(report, options.strict,
             "line " + std::to_string(line_number) + ": unknown label '" +
                 std::string(fields[options.label_column]) + "'");
      continue;
    }
    LabeledStatement record;
    record.id = std::string(fields[options.id_column]);
    record.text = std::string(fields[options.text_column]);
    record.label6 = *label;
    record.label2 = CollapseLabel(*label);
    record.source = Source::kLiar;
    report.records.push_back(std::move(record));
  }
  return report;
}

LoadReport LoadLiar(const std::filesystem::path& path, const LiarOptions& options) {
  return ParseLiar(ReadFileToString(path), options);
}

std::vector<std::vector<std::string>> ParseCsv(std::string_view contents) {
  std::vector<std::vector<std::string>> rows;
  for (CsvRecord& record : ParseCsvRecords(contents)) {
    rows.push_back(std::move(record.fields));
  }
  return rows;
}

LoadReport ParseKaggle(std::string_view contents, const KaggleOptions& options) {
  const std::vector<CsvRecord> records = ParseCsvRecords(contents);
  if (records.empty()) throw Error(ErrorCode::kParse, "kaggle file has no header row");

  std::map<std::string, size_t> column;
  for (size_t i = 0; i < records[0].fields.size(); ++i) {
    column[Lowercase(records[0].fields[i])] = i;
  }
  for (const char* required : {"id", "title", "text", "label"}) {
    if (!column.contains(required)) {
      throw Error(ErrorCode::kParse,
                  std::string("kaggle header lacks column '") + required + "'");
    }
  }
  const size_t width = records[0].fields.size();
  const size_t id_col = column["id"];
  const size_t title_col = column["title"];
  const size_t text_col = column["text"];
  const size_t label_col = column["label"];

  LoadReport report;
  for (size_t r = 1; r < records.size(); ++r) {
    const CsvRecord& record = records[r];
    const std::string where = "row " + std::to_string(r) + " (line " +
                              std::to_string(record.line) + ")";
    if (record.fields.size() != width) {
      Reject(report, options.strict,
             where + ": expected " + std::to_string(width) + " fields, found " +
                 std::to_string(record.fields.size()));
      continue;
    }
    const std::string& label = record.fields[label_col];
    LabeledStatement statement;
    if (label == options.fake_value) {
      statement.label2 = Label2::kFake;
    } else if (label == options.real_value) {
      statement.label2 = Label2::kReal;
    } else {
      Reject(report, options.strict, where + ": unknown label '" + label + "'");
      continue;
    }
    const std::string& title = record.fields[title_col];
    const std::string& body = record.fields[text_col];
    if (options.field == KaggleField::kTitle) {
      statement.text = title;
    } else if (title.empty() || body.empty()) {
      statement.text = title.empty() ? body : title;
    } else {
      statement.text = title + "\n" + body;
    }
    if (statement.text.find_first_not_of(" \t\r\n") == std::string::npos) {
      ++report.skipped;
      report.diagnostics.push_back(where + ": empty text, skipped");
      continue;
    }
    statement.id = record.fields[id_col];
    statement.source = Source::kKaggle;
    report.records.push_back(std::move(statement));
  }
  return report;
}

LoadReport LoadKaggle(const std::filesystem::path& path,
                      const KaggleOptions& options) {
  return ParseKaggle(ReadFileToString(path), options);
}

SplitResult Split(std::vector<LabeledStatement> records, const SplitSpec& spec) {
  if (records.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cannot split an empty record set");
  }
  if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "train fraction must lie in (0, 1)");
  }
  Rng rng(spec.seed);
  rng.Shuffle(records);
  // The epsilon keeps e.g. 10 * 0.3 = 3.0000000000000004 from rounding up.
  const double exact = static_cast<double>(records.size()) * spec.train_fraction;
  const size_t train_size = std::min(
      records.size(), static_cast<size_t>(std::ceil(exact - 1e-9)));
  SplitResult result;
  result.train.assign(std::make_move_iterator(records.begin()),
                      std::make_move_iterator(records.begin() + train_size));
  result.test.assign(std::make_move_iterator(records.begin() + train_size),
                     std::make_move_iterator(records.end()));
  return result;
}

nlohmann::ordered_json ToJson(const LabeledStatement& record) {
  nlohmann::ordered_json json;
  json["id"] = record.id;
  json["text"] = record.text;
  json["label2"] = Label2Name(record.label2);
  if (record.label6) json["label6"] = Label6Name(*record.label6);
  json["source"] = SourceName(record.source);
  return json;
}

LabeledStatement LabeledStatementFromJson(const nlohmann::json& json) {
  if (!json.is_object()) throw Error(ErrorCode::kParse, "record is not a JSON object");
  for (const char* key : {"id", "text", "label2"}) {
    if (!json.contains(key) || !json[key].is_string()) {
      throw Error(ErrorCode::kParse, std::string("record lacks string field '") + key + "'");
    }
  }
  LabeledStatement record;
  record.id = json["id"].get<std::string>();
  record.text = json["text"].get<std::string>();
  const auto label2 = ParseLabel2(json["label2"].get<std::string>());
  if (!label2) throw Error(ErrorCode::kParse, "record " + record.id + ": bad label2");
  record.label2 = *label2;
  if (json.contains("label6") && !json["label6"].is_null()) {
    const auto label6 = ParseLabel6(json["label6"].get<std::string>());
    if (!label6) throw Error(ErrorCode::kParse, "record " + record.id + ": bad label6");
    if (CollapseLabel(*label6) != record.label2) {
      throw Error(ErrorCode::kParse,
                  "record " + record.id + ": label2 disagrees with label6");
    }
    record.label6 = *label6;
  }
  if (json.contains("source")) {
    const auto source = ParseSource(json["source"].get<std::string>());
    if (!source) throw Error(ErrorCode::kParse, "record " + record.id + ": bad source");
    record.source = *source;
  }
  return record;
}

std::string DumpJsonLine(const nlohmann::ordered_json& json) {
  return json.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

std::vector<LabeledStatement> ReadJsonl(const std::filesystem::path& path) {
  const std::string contents = ReadFileToString(path);
  std::vector<LabeledStatement> records;
  size_t line_number = 0;
  size_t pos = 0;
  while (pos < contents.size()) {
    size_t end = contents.find('\n', pos);
    if (end == std::string::npos) end = contents.size();
    const std::string_view line =
        StripCr(std::string_view(contents).substr(pos, end - pos));
    pos = end + 1;
    ++line_number;
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    try {
      records.push_back(LabeledStatementFromJson(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParse, path.string() + ":" + std::to_string(line_number) +
                                         ": " + e.what());
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, path.string() + ":" + std::to_string(line_number) +
                                         ": " + e.what());
    }
  }
  return records;
}

void WriteJsonl(const std::filesystem::path& path,
                const std::vector<LabeledStatement>& records) {
  std::string out;
  for (const LabeledStatement& record : records) {
    out += DumpJsonLine(ToJson(record));
    out += '\n';
  }
  WriteStringToFile(path, out);
}

}  // namespace newsbreaker
