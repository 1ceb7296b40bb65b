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

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"
#include "newsbreaker/io.h"
#include "test_support.h"
#include "cli.h"

namespace newsbreaker {
namespace {

using testing::CliBinary;
using testing::ReadFixtureJsonl;
using testing::RunBinary;
using testing::SplitLines;
using testing::TempDir;
using testing::TestDataPath;

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

CliResult Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "newsbreaker");
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Data(std::string_view name) { return TestDataPath(name).string(); }

std::string Builtin(const std::string& model) { return "builtin:" + model; }

TEST(CliTest, NoArgumentsIsUsageError) { EXPECT_EQ(Cli({}).exit_code, kExitUsage); }

TEST(CliTest, HelpSucceeds) {
  const CliResult result = Cli({"--help"});
  EXPECT_EQ(result.exit_code, kExitOk);
  EXPECT_NE(result.out.find("attack"), std::string::npos);
}

TEST(CliTest, UnknownFlagIsUsageError) {
  EXPECT_EQ(Cli({"attack", "--kind", "negation", "--bogus"}).exit_code, kExitUsage);
}

TEST(CliTest, UnknownAttackKindIsUsageError) {
  TempDir dir;
  EXPECT_EQ(Cli({"attack", "--kind", "sarcasm", "--in", Data("attack_input_10.jsonl"), "--out",
                 (dir / "o.jsonl").string()})
                .exit_code,
            kExitUsage);
}

TEST(CliTest, PartyWithoutRosterIsUsageError) {
  TempDir dir;
  EXPECT_EQ(Cli({"attack", "--kind", "party", "--in", Data("attack_input_10.jsonl"), "--out",
                 (dir / "o.jsonl").string()})
                .exit_code,
            kExitUsage);
}

TEST(CliTest, MissingInputIsDataError) {
  TempDir dir;
  const CliResult result = Cli({"attack", "--kind", "negation", "--in", (dir / "absent.jsonl").string(), "--out",
                                (dir / "o.jsonl").string()});
  EXPECT_EQ(result.exit_code, kExitData);
  EXPECT_FALSE(result.err.empty());
}

TEST(CliTest, StrictIngestOfMalformedFileIsDataError) {
  TempDir dir;
  WriteStringToFile(dir / "bad.tsv", "1.json\ttrue\tok statement\n2.json\tsort-of\tbad label\n");
  EXPECT_EQ(Cli({"ingest", "--dataset", "liar", "--in", (dir / "bad.tsv").string(), "--strict"}).exit_code,
            kExitData);
  const CliResult lenient = Cli({"ingest", "--dataset", "liar", "--in", (dir / "bad.tsv").string(), "--out",
                                 (dir / "out.jsonl").string()});
  EXPECT_EQ(lenient.exit_code, kExitOk);
  EXPECT_EQ(SplitLines(ReadFileToString(dir / "out.jsonl")).size(), 1u);
}

TEST(CliTest, IngestLiar) {
  TempDir dir;
  const CliResult result =
      Cli({"ingest", "--dataset", "liar", "--in", Data("liar_sample.tsv"), "--out", (dir / "liar.jsonl").string()});
  ASSERT_EQ(result.exit_code, kExitOk) << result.err;
  const std::vector<std::string> lines = SplitLines(ReadFileToString(dir / "liar.jsonl"));
  ASSERT_EQ(lines.size(), 12u);
  const nlohmann::json first = nlohmann::json::parse(lines[0]);
  EXPECT_EQ(first["id"], "2635.json");
  EXPECT_EQ(first["label2"], "fake");
  EXPECT_EQ(first["label6"], "false");
}

TEST(CliTest, IngestKaggleSplitMatchesLibrary) {
  TempDir dir;
  const CliResult result = Cli({"ingest", "--dataset", "kaggle", "--in", Data("kaggle_synthetic_2000.csv"),
                                "--split", "0.7", "--seed", "42", "--train-out", (dir / "train.jsonl").string(),
                                "--test-out", (dir / "test.jsonl").string()});
  ASSERT_EQ(result.exit_code, kExitOk) << result.err;
  const SplitResult pinned = testing::PinnedKaggleSplit();
  const std::vector<LabeledStatement> train = ReadJsonl(dir / "train.jsonl");
  const std::vector<LabeledStatement> test = ReadJsonl(dir / "test.jsonl");
  ASSERT_EQ(train.size(), 1400u);
  ASSERT_EQ(test.size(), 600u);
  for (size_t i = 0; i < train.size(); ++i) EXPECT_EQ(train[i].id, pinned.train[i].id);
  for (size_t i = 0; i < test.size(); ++i) EXPECT_EQ(test[i].id, pinned.test[i].id);
}

TEST(CliTest, SplitFlagsMustComeTogether) {
  TempDir dir;
  EXPECT_EQ(Cli({"ingest", "--dataset", "kaggle", "--in", Data("kaggle_synthetic_2000.csv"), "--split", "0.7"})
                .exit_code,
            kExitUsage);
}

TEST(CliTest, AttackMatchesGolden) {
  TempDir dir;
  const CliResult result = Cli({"attack", "--kind", "negation", "--in", Data("attack_input_10.jsonl"), "--out",
                                (dir / "pairs.jsonl").string()});
  ASSERT_EQ(result.exit_code, kExitOk) << result.err;
  EXPECT_EQ(ReadFileToString(dir / "pairs.jsonl"), ReadFileToString(TestDataPath("attack_negation_10_golden.jsonl")));
  EXPECT_NE(result.err.find("9 of 10 statements modified"), std::string::npos);
}

TEST(CliTest, SeedFromEnvironmentMatchesFlag) {
  TempDir dir;
  const std::vector<std::string> common = {"attack", "--kind", "party", "--roster", testing::SourcePath("data/roster_sample.csv").string(),
                                           "--in", Data("negation_fixture.jsonl")};
  auto flag = common;
  flag.insert(flag.end(), {"--seed", "287", "--out", (dir / "flag.jsonl").string()});
  ASSERT_EQ(Cli(flag).exit_code, kExitOk);

  ASSERT_EQ(setenv("NEWSBREAKER_SEED", "287", 1), 0);
  auto env = common;
  env.insert(env.end(), {"--out", (dir / "env.jsonl").string()});
  const int env_code = Cli(env).exit_code;
  ASSERT_EQ(setenv("NEWSBREAKER_SEED", "banana", 1), 0);
  auto bad = common;
  bad.insert(bad.end(), {"--out", (dir / "bad.jsonl").string()});
  const int bad_code = Cli(bad).exit_code;
  unsetenv("NEWSBREAKER_SEED");

  EXPECT_EQ(env_code, kExitOk);
  EXPECT_EQ(ReadFileToString(dir / "flag.jsonl"), ReadFileToString(dir / "env.jsonl"));
  EXPECT_EQ(bad_code, kExitUsage);
}

class CliEvalTest : public ::testing::Test {
 protected:
  CliResult Eval(const std::string& report, std::vector<std::string> extra) {
    std::vector<std::string> args = {"eval", "--classifier", Builtin(Data("fixture_model.bin")), "--report",
                                     (dir_ / report).string()};
    args.insert(args.end(), extra.begin(), extra.end());
    return Cli(args);
  }

  TempDir dir_;
};

TEST_F(CliEvalTest, RerunIsByteIdentical) {
  const std::vector<std::string> input = {"--attack", "negation", "--in", Data("negation_fixture.jsonl")};
  const CliResult first = Eval("a", input);
  ASSERT_EQ(first.exit_code, kExitOk) << first.err;
  ASSERT_EQ(Eval("b", input).exit_code, kExitOk);
  EXPECT_EQ(ReadFileToString(dir_ / "a" / "report.json"), ReadFileToString(dir_ / "b" / "report.json"));
  EXPECT_EQ(ReadFileToString(dir_ / "a" / "report.md"), ReadFileToString(dir_ / "b" / "report.md"));
  EXPECT_EQ(first.out, ReadFileToString(dir_ / "a" / "report.md"));
}

TEST_F(CliEvalTest, InEqualsAttackThenPairs) {
  ASSERT_EQ(Eval("direct", {"--attack", "negation", "--in", Data("negation_fixture.jsonl"), "--name", "row"})
                .exit_code,
            kExitOk);
  ASSERT_EQ(Cli({"attack", "--kind", "negation", "--in", Data("negation_fixture.jsonl"), "--out",
                 (dir_ / "pairs.jsonl").string()})
                .exit_code,
            kExitOk);
  ASSERT_EQ(Eval("staged", {"--pairs", (dir_ / "pairs.jsonl").string(), "--name", "row"}).exit_code, kExitOk);
  EXPECT_EQ(ReadFileToString(dir_ / "direct" / "report.json"), ReadFileToString(dir_ / "staged" / "report.json"));
  EXPECT_EQ(ReadFileToString(dir_ / "direct" / "report.md"), ReadFileToString(dir_ / "staged" / "report.md"));
}

TEST_F(CliEvalTest, ReportMatchesGolden) {
  ASSERT_EQ(Eval("r", {"--attack", "negation", "--in", Data("negation_fixture.jsonl")}).exit_code, kExitOk);
  const nlohmann::json got = nlohmann::json::parse(ReadFileToString(dir_ / "r" / "report.json"));
  const nlohmann::json want = nlohmann::json::parse(ReadFileToString(TestDataPath("negation_golden_report.json")));
  EXPECT_EQ(got["n_input"], want["n_input"]);
  EXPECT_EQ(got["n_applicable"], want["n_applicable"]);
  EXPECT_NEAR(got["label_flip_pct"].get<double>(), want["label_flip_pct"].get<double>(), 1e-12);
  EXPECT_NEAR(got["delta_prob_mean"].get<double>(), want["delta_prob_mean"].get<double>(), 1e-12);
}

TEST_F(CliEvalTest, NeedsExactlyOneInput) {
  EXPECT_EQ(Eval("x", {"--attack", "negation"}).exit_code, kExitUsage);
  EXPECT_EQ(Eval("x", {"--attack", "negation", "--in", Data("negation_fixture.jsonl"), "--pairs",
                       Data("attack_negation_10_golden.jsonl")})
                .exit_code,
            kExitUsage);
  EXPECT_EQ(Eval("x", {"--in", Data("negation_fixture.jsonl")}).exit_code, kExitUsage);
}

TEST_F(CliEvalTest, BadClassifierSourceIsUsageError) {
  const CliResult result = Cli({"eval", "--classifier", "ftp:nowhere", "--report", (dir_ / "r").string(),
                                "--attack", "negation", "--in", Data("negation_fixture.jsonl")});
  EXPECT_EQ(result.exit_code, kExitUsage);
}

TEST(CliTest, TrainIsDeterministicAndSeparatesToySet) {
  TempDir dir;
  const std::vector<std::string> train = {"train", "--in", Data("toy_separable.jsonl"), "--dim", "8", "--hidden",
                                          "4", "--epochs", "20", "--seed", "7"};
  auto first = train;
  first.insert(first.end(), {"--out", (dir / "a.bin").string()});
  auto second = train;
  second.insert(second.end(), {"--out", (dir / "b.bin").string()});
  const CliResult trained = Cli(first);
  ASSERT_EQ(trained.exit_code, kExitOk) << trained.err;
  ASSERT_EQ(Cli(second).exit_code, kExitOk);
  EXPECT_EQ(ReadFileToString(dir / "a.bin"), ReadFileToString(dir / "b.bin"));
  EXPECT_NE(trained.err.find("train: epoch 20 loss"), std::string::npos);

  const CliResult accuracy = Cli({"accuracy", "--classifier", Builtin((dir / "a.bin").string()), "--in",
                                  Data("toy_separable.jsonl"), "--out", (dir / "acc.json").string()});
  ASSERT_EQ(accuracy.exit_code, kExitOk) << accuracy.err;
  EXPECT_EQ(accuracy.out, "100.0\n");
  const nlohmann::json summary = nlohmann::json::parse(ReadFileToString(dir / "acc.json"));
  EXPECT_EQ(summary["n"], 100);
  EXPECT_DOUBLE_EQ(summary["accuracy_pct"].get<double>(), 100.0);
}

TEST(CliTest, TrainOnEmptyInputIsDataError) {
  TempDir dir;
  WriteStringToFile(dir / "empty.jsonl", "");
  EXPECT_EQ(Cli({"train", "--in", (dir / "empty.jsonl").string(), "--out", (dir / "m.bin").string()}).exit_code,
            kExitData);
}

TEST(CliTest, LoadingCorruptModelIsDataError) {
  TempDir dir;
  WriteStringToFile(dir / "m.bin", "NBMODEL");
  EXPECT_EQ(Cli({"accuracy", "--classifier", Builtin((dir / "m.bin").string()), "--in",
                 Data("toy_separable.jsonl")})
                .exit_code,
            kExitData);
}

TEST(CliTest, SaliencyScatterHeatmapAreDeterministic) {
  TempDir dir;
  const std::string model = Data("fixture_model.bin");
  std::string previous_stats;
  std::string previous_svg;
  std::string previous_csv;
  std::string previous_heatmap;
  for (int run = 0; run < 2; ++run) {
    const std::string stats = (dir / ("stats" + std::to_string(run) + ".jsonl")).string();
    const std::string svg = (dir / ("scatter" + std::to_string(run) + ".svg")).string();
    const std::string heatmap = (dir / ("heat" + std::to_string(run) + ".html")).string();
    const CliResult saliency =
        Cli({"saliency", "--model", model, "--in", Data("negation_fixture.jsonl"), "--out", stats, "--top", "5"});
    ASSERT_EQ(saliency.exit_code, kExitOk) << saliency.err;
    EXPECT_EQ(SplitLines(saliency.out).size(), 5u);
    ASSERT_EQ(Cli({"scatter", "--stats", stats, "--out", svg}).exit_code, kExitOk);
    ASSERT_EQ(Cli({"heatmap", "--model", model, "--in", Data("negation_fixture.jsonl"), "--id", "neg-01", "--out",
                   heatmap})
                  .exit_code,
              kExitOk);
    const std::string csv = (dir / ("scatter" + std::to_string(run) + ".csv")).string();
    if (run == 1) {
      EXPECT_EQ(ReadFileToString(stats), previous_stats);
      EXPECT_EQ(ReadFileToString(svg), previous_svg);
      EXPECT_EQ(ReadFileToString(csv), previous_csv);
      EXPECT_EQ(ReadFileToString(heatmap), previous_heatmap);
    }
    previous_stats = ReadFileToString(stats);
    previous_svg = ReadFileToString(svg);
    previous_csv = ReadFileToString(csv);
    previous_heatmap = ReadFileToString(heatmap);
  }
  EXPECT_NE(previous_svg.find("<svg"), std::string::npos);
  EXPECT_NE(previous_heatmap.find("neg-01"), std::string::npos);
}

TEST(CliTest, HeatmapNeedsTextOrId) {
  TempDir dir;
  EXPECT_EQ(Cli({"heatmap", "--model", Data("fixture_model.bin"), "--out", (dir / "h.html").string()}).exit_code,
            kExitUsage);
  EXPECT_EQ(Cli({"heatmap", "--model", Data("fixture_model.bin"), "--in", Data("negation_fixture.jsonl"), "--id",
                 "no-such-id", "--out", (dir / "h.html").string()})
                .exit_code,
            kExitData);
}

TEST(CliTest, VerifyProtocolGoldenTranscript) {
  const CliResult result = Cli({"verify-protocol", "--transcript", Data("golden_transcript.jsonl"), "--classifier",
                                Builtin(Data("fixture_model.bin"))});
  EXPECT_EQ(result.exit_code, kExitOk) << result.err;
  EXPECT_EQ(result.out, "50/50 lines pass\n");
}

TEST(CliTest, VerifyProtocolReportsMismatch) {
  TempDir dir;
  std::vector<std::string> lines = SplitLines(ReadFileToString(TestDataPath("golden_transcript.jsonl")));
  nlohmann::ordered_json line = nlohmann::ordered_json::parse(lines[0]);
  line["expected_probs"]["fake"] = line["expected_probs"]["fake"].get<double>() + 1e-6;
  lines[0] = line.dump();
  std::string transcript;
  for (const std::string& l : lines) transcript += l + "\n";
  WriteStringToFile(dir / "t.jsonl", transcript);
  const CliResult result = Cli({"verify-protocol", "--transcript", (dir / "t.jsonl").string(), "--classifier",
                                Builtin(Data("fixture_model.bin")), "--report", (dir / "r.json").string()});
  EXPECT_EQ(result.exit_code, kExitData);
  EXPECT_EQ(result.out, "49/50 lines pass\n");
  EXPECT_NE(result.err.find("line 1"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(dir / "r.json"));
}

TEST(CliTest, VerifyProtocolThroughSubprocess) {
  const std::string command =
      "cmd:" + testing::ShellQuote(CliBinary().string()) + " serve --model " + testing::ShellQuote(Data("fixture_model.bin"));
  const CliResult result =
      Cli({"verify-protocol", "--transcript", Data("golden_transcript.jsonl"), "--classifier", command});
  EXPECT_EQ(result.exit_code, kExitOk) << result.err;
  EXPECT_EQ(result.out, "50/50 lines pass\n");
}

TEST(CliTest, BinaryExitCodes) {
  EXPECT_EQ(RunBinary({}).exit_code, kExitUsage);
  EXPECT_EQ(RunBinary({"--help"}).exit_code, kExitOk);
  EXPECT_EQ(RunBinary({"attack", "--kind", "negation", "--in", "/nonexistent/x.jsonl", "--out", "/tmp/unused"})
                .exit_code,
            kExitData);
}

}  // namespace
}  // namespace newsbreaker
