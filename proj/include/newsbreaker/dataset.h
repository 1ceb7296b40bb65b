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

// Corpus ingestion (LIAR TSV, Kaggle Fake-News CSV), the six-to-two label
// collapse, deterministic splits and the canonical JSON-lines interchange.

#ifndef NEWSBREAKER_DATASET_H_
#define NEWSBREAKER_DATASET_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "newsbreaker/io.h"
#include "newsbreaker/random.h"

namespace newsbreaker {

enum class Label6 { kTrue, kMostlyTrue, kHalfTrue, kBarelyTrue, kFalse, kPantsOnFire };
enum class Label2 { kReal, kFake };
enum class Source { kLiar, kKaggle, kOther };

// LIAR spellings: "true", "mostly-true", "half-true", "barely-true",
// "false", "pants-fire".
const char* Label6Name(Label6 label);
std::optional<Label6> ParseLabel6(std::string_view name);

// "real" / "fake".
const char* Label2Name(Label2 label);
std::optional<Label2> ParseLabel2(std::string_view name);

const char* SourceName(Source source);
std::optional<Source> ParseSource(std::string_view name);

Label2 CollapseLabel(Label6 label);

struct LabeledStatement {
  std::string id;
  std::string text;
  std::optional<Label6> label6;
  Label2 label2 = Label2::kReal;
  Source source = Source::kOther;

  bool operator==(const LabeledStatement&) const = default;
};

struct LoadReport {
  std::vector<LabeledStatement> records;
  size_t skipped = 0;
  std::vector<std::string> diagnostics;
};

struct LiarOptions {
  size_t id_column = 0;
  size_t label_column = 1;
  size_t text_column = 2;
  // Malformed lines throw instead of being skipped.
  bool strict = false;
};

LoadReport ParseLiar(std::string_view contents, const LiarOptions& options = {});
LoadReport LoadLiar(const std::filesystem::path& path,
                    const LiarOptions& options = {});

enum class KaggleField { kTitle, kTitleAndBody };

struct KaggleOptions {
  KaggleField field = KaggleField::kTitle;
  // Values of the label column; the published data uses 1 for unreliable.
  std::string fake_value = "1";
  std::string real_value = "0";
  bool strict = false;
};

LoadReport ParseKaggle(std::string_view contents,
                       const KaggleOptions& options = {});
LoadReport LoadKaggle(const std::filesystem::path& path,
                      const KaggleOptions& options = {});

// RFC 4180 records. Throws Error(kParse) on an unterminated quote.
std::vector<std::vector<std::string>> ParseCsv(std::string_view contents);

struct SplitSpec {
  double train_fraction = 0.7;
  uint64_t seed = kDefaultSeed;
};

struct SplitResult {
  std::vector<LabeledStatement> train;
  std::vector<LabeledStatement> test;
};

// Seeded shuffle, then the first ceil(n * train_fraction) records train.
SplitResult Split(std::vector<LabeledStatement> records, const SplitSpec& spec);

nlohmann::ordered_json ToJson(const LabeledStatement& record);
LabeledStatement LabeledStatementFromJson(const nlohmann::json& json);

// One compact JSON object per line.
std::string DumpJsonLine(const nlohmann::ordered_json& json);

std::vector<LabeledStatement> ReadJsonl(const std::filesystem::path& path);
void WriteJsonl(const std::filesystem::path& path,
                const std::vector<LabeledStatement>& records);

}  // namespace newsbreaker

#endif  // NEWSBREAKER_DATASET_H_
