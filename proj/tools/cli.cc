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

#include "cli.h"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "newsbreaker/attacks.h"
#include "newsbreaker/classifier.h"
#include "newsbreaker/dataset.h"
#include "newsbreaker/error.h"
#include "newsbreaker/eval.h"
#include "newsbreaker/io.h"
#include "newsbreaker/protocol.h"
#include "newsbreaker/saliency_analysis.h"
#include "newsbreaker/transport.h"

namespace newsbreaker {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

constexpr const char* kSeedEnv = "NEWSBREAKER_SEED";

// Thrown for flag combinations CLI11 cannot express; exits with kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<uint64_t> ParseU64(std::string_view text) {
  uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
  return value;
}

struct SeedFlag {
  std::optional<uint64_t> value;

  uint64_t Resolve() const {
    if (value) return *value;
    if (const char* env = std::getenv(kSeedEnv); env != nullptr && *env != '\0') {
      const auto parsed = ParseU64(env);
      if (!parsed) throw UsageError(std::string(kSeedEnv) + " is not an unsigned 64-bit integer: " + env);
      return *parsed;
    }
    return kDefaultSeed;
  }
};

void AddSeed(CLI::App* app, SeedFlag& seed) {
  app->add_option("--seed", seed.value,
                  "Random seed (default: $" + std::string(kSeedEnv) + ", else " +
                      std::to_string(kDefaultSeed) + ")");
}

struct ClassifierFlags {
  std::string classifier;
  size_t jobs = 1;
  size_t window = SessionOptions{}.window;
  int64_t timeout_ms = SessionOptions{}.timeout.count();

  void Add(CLI::App* app) {
    app->add_option("--classifier", classifier, "builtin:PATH | cmd:COMMAND | tcp:HOST:PORT")->required();
    app->add_option("--jobs", jobs, "Worker threads for the built-in classifier")
        ->check(CLI::PositiveNumber);
    app->add_option("--window", window, "Requests in flight per protocol session")
        ->check(CLI::PositiveNumber);
    app->add_option("--timeout-ms", timeout_ms, "Protocol read timeout")->check(CLI::PositiveNumber);
  }

  std::unique_ptr<ClassifierClient> Open() const {
    ClassifierSource source;
    try {
      source = ParseClassifierSource(classifier);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    SessionOptions options;
    options.window = window;
    options.timeout = std::chrono::milliseconds(timeout_ms);
    return OpenClassifier(source, options, jobs);
  }
};

AttackKind ParseKindOrThrow(const std::string& name) {
  const auto kind = ParseAttackKind(name);
  if (!kind) throw UsageError("unknown attack kind '" + name + "'");
  return *kind;
}

const std::vector<std::string> kAttackNames = {"negation", "party", "adverb"};

struct AttackFlags {
  std::string roster;
  std::string lexicon;
  SeedFlag seed;

  void Add(CLI::App* app) {
    app->add_option("--roster", roster, "Politician roster (Full Name,D|R per line)");
    app->add_option("--lexicon", lexicon, "Adverb lexicon, one word per line");
    AddSeed(app, seed);
  }

  struct Loaded {
    std::optional<Roster> roster;
    AttackInputs inputs;
  };

  // The roster is kept alive in the returned object; inputs point into it.
  std::unique_ptr<Loaded> Load(AttackKind kind) const {
    auto loaded = std::make_unique<Loaded>();
    if (kind == AttackKind::kPartyReversal) {
      if (roster.empty()) throw UsageError("the party attack needs --roster");
      loaded->roster.emplace(LoadRoster(roster));
      loaded->inputs.roster = &*loaded->roster;
    }
    if (!lexicon.empty()) loaded->inputs.lexicon = LoadLexicon(lexicon);
    loaded->inputs.seed = seed.Resolve();
    return loaded;
  }
};

std::string JsonFile(const ordered_json& json) {
  return json.dump(2, ' ', false, ordered_json::error_handler_t::replace) + "\n";
}

SaliencyTarget ParseTarget(const std::string& name) {
  return name == "probability" ? SaliencyTarget::kProbability : SaliencyTarget::kLogit;
}

// ingest ---------------------------------------------------------------------

struct IngestFlags {
  std::string dataset;
  std::string in;
  std::string out;
  std::string field = "title";
  bool strict = false;
  std::string fake_value = "1";
  std::string real_value = "0";
  std::optional<double> split;
  std::string train_out;
  std::string test_out;
  SeedFlag seed;
};

int RunIngest(const IngestFlags& f, std::ostream& err) {
  if (f.split && (f.train_out.empty() || f.test_out.empty())) {
    throw UsageError("--split needs --train-out and --test-out");
  }
  if (!f.split && (!f.train_out.empty() || !f.test_out.empty())) {
    throw UsageError("--train-out/--test-out need --split");
  }
  LoadReport report;
  if (f.dataset == "liar") {
    LiarOptions options;
    options.strict = f.strict;
    report = LoadLiar(f.in, options);
  } else {
    KaggleOptions options;
    options.field = f.field == "title" ? KaggleField::kTitle : KaggleField::kTitleAndBody;
    options.fake_value = f.fake_value;
    options.real_value = f.real_value;
    options.strict = f.strict;
    report = LoadKaggle(f.in, options);
  }
  for (const std::string& diagnostic : report.diagnostics) err << "ingest: " << diagnostic << "\n";
  err << "ingest: " << report.records.size() << " records, " << report.skipped << " skipped\n";
  if (!f.out.empty()) WriteJsonl(f.out, report.records);
  if (f.split) {
    SplitResult split = Split(report.records, {*f.split, f.seed.Resolve()});
    WriteJsonl(f.train_out, split.train);
    WriteJsonl(f.test_out, split.test);
    err << "ingest: split " << split.train.size() << " train / " << split.test.size() << " test\n";
  }
  return kExitOk;
}

// train ----------------------------------------------------------------------

struct TrainFlags {
  std::string in;
  std::string out;
  TrainConfig config;
  size_t min_frequency = 1;
  SeedFlag seed;
};

int RunTrain(TrainFlags f, std::ostream& err) {
  const std::vector<LabeledStatement> records = ReadJsonl(f.in);
  if (records.empty()) throw Error(ErrorCode::kParse, f.in + ": no training records");
  f.config.seed = f.seed.Resolve();
  std::vector<std::string> texts;
  texts.reserve(records.size());
  for (const LabeledStatement& r : records) texts.push_back(r.text);
  Model model{{}, Vocab::Build(texts, f.min_frequency)};
  TrainResult result = Train(records, model.vocab, f.config);
  model.params = std::move(result.params);
  for (size_t epoch = 0; epoch < result.epoch_loss.size(); ++epoch) {
    char line[64];
    std::snprintf(line, sizeof(line), "train: epoch %zu loss %.6f\n", epoch + 1, result.epoch_loss[epoch]);
    err << line;
  }
  SaveModel(model, f.out);
  err << "train: vocabulary " << model.vocab.size() << ", wrote " << f.out << "\n";
  return kExitOk;
}

// attack ---------------------------------------------------------------------

struct AttackCmdFlags {
  std::string kind;
  std::string in;
  std::string out;
  AttackFlags attack;
};

int RunAttackCmd(const AttackCmdFlags& f, std::ostream& err) {
  const AttackKind kind = ParseKindOrThrow(f.kind);
  const auto loaded = f.attack.Load(kind);
  const std::vector<LabeledStatement> statements = ReadJsonl(f.in);
  const std::vector<AttackRecord> records = GenerateAttacks(statements, kind, loaded->inputs);
  WriteStringToFile(f.out, AttackRecordsToJsonl(records));
  size_t applicable = 0;
  for (const AttackRecord& r : records) applicable += r.outcome.applicable ? 1 : 0;
  err << "attack: " << applicable << " of " << records.size() << " statements modified\n";
  return kExitOk;
}

// eval -----------------------------------------------------------------------

struct EvalFlags {
  std::string attack_kind;
  std::string in;
  std::string pairs;
  std::string report_dir;
  std::string overrides;
  std::string name;
  AttackFlags attack;
  ClassifierFlags classifier;
};

int RunEval(const EvalFlags& f, std::ostream& out, std::ostream& err) {
  if (f.in.empty() == f.pairs.empty()) throw UsageError("eval needs exactly one of --in or --pairs");
  std::vector<AttackRecord> records;
  std::optional<AttackKind> kind;
  if (!f.attack_kind.empty()) kind = ParseKindOrThrow(f.attack_kind);
  if (!f.pairs.empty()) {
    records = ReadAttackRecords(f.pairs);
    if (!kind) {
      if (records.empty()) throw UsageError("empty --pairs file; pass --attack");
      kind = records.front().attack;
    }
  } else {
    if (!kind) throw UsageError("eval --in needs --attack");
    const auto loaded = f.attack.Load(*kind);
    records = GenerateAttacks(ReadJsonl(f.in), *kind, loaded->inputs);
  }
  const std::map<std::string, Override> overrides =
      f.overrides.empty() ? std::map<std::string, Override>{} : LoadOverrides(f.overrides);

  auto classifier = f.classifier.Open();
  const AttackReport report = EvaluatePairs(*classifier, records, *kind, overrides);
  for (const PairError& e : report.errors) err << "eval: pair " << e.id << ": " << e.kind << ": " << e.message << "\n";

  std::string row = f.name;
  if (row.empty()) row = fs::path(f.in.empty() ? f.pairs : f.in).stem().string();
  const std::vector<TableRow> rows = {{row, report.label_flip_pct, report.delta_prob_mean}};
  const std::string table = RenderTable(rows);
  const fs::path dir = f.report_dir;
  WriteStringToFile(dir / "report.json", JsonFile(ToJson(report)));
  WriteStringToFile(dir / "report.md", table);
  out << table;
  err << "eval: " << report.n_applicable << " of " << report.n_input << " pairs scored (" << report.n_not_applicable
      << " not applicable, " << report.n_excluded << " excluded, " << report.n_errors << " errors)\n";
  return kExitOk;
}

// accuracy -------------------------------------------------------------------

struct AccuracyFlags {
  std::string in;
  std::string out;
  ClassifierFlags classifier;
};

int RunAccuracy(const AccuracyFlags& f, std::ostream& out) {
  const std::vector<LabeledStatement> statements = ReadJsonl(f.in);
  auto classifier = f.classifier.Open();
  const double accuracy = Accuracy(*classifier, statements);
  char line[64];
  std::snprintf(line, sizeof(line), "%.1f\n", accuracy);
  out << line;
  if (!f.out.empty()) {
    ordered_json json;
    json["n"] = statements.size();
    json["accuracy_pct"] = accuracy;
    WriteStringToFile(f.out, JsonFile(json));
  }
  return kExitOk;
}

// saliency / scatter / heatmap ------------------------------------------------

struct SaliencyFlags {
  std::string model;
  std::string in;
  std::string out;
  std::string target = "logit";
  size_t top = 30;
};

int RunSaliency(const SaliencyFlags& f, std::ostream& out) {
  const Model model = LoadModel(f.model);
  std::vector<std::string> corpus;
  for (const LabeledStatement& r : ReadJsonl(f.in)) corpus.push_back(r.text);
  if (corpus.empty()) throw Error(ErrorCode::kParse, f.in + ": empty corpus");
  const std::vector<WordSaliencyStat> stats = AggregateWordSaliency(model, corpus, ParseTarget(f.target));
  std::string lines;
  for (const WordSaliencyStat& s : stats) {
    lines += DumpJsonLine(ordered_json{{"word", s.word},
                                       {"doc_frequency", s.doc_frequency},
                                       {"n_occurrences", s.n_occurrences},
                                       {"mean_score", s.mean_score}});
    lines += '\n';
  }
  WriteStringToFile(f.out, lines);
  for (size_t i = 0; i < std::min(f.top, stats.size()); ++i) {
    char line[64];
    std::snprintf(line, sizeof(line), "\t%+.6f\t%zu\n", stats[i].mean_score, stats[i].doc_frequency);
    out << stats[i].word << line;
  }
  return kExitOk;
}

std::vector<WordSaliencyStat> ReadStats(const std::string& path) {
  std::vector<WordSaliencyStat> stats;
  std::istringstream lines(ReadFileToString(path));
  std::string line;
  size_t number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (line.empty()) continue;
    try {
      const nlohmann::json json = nlohmann::json::parse(line);
      stats.push_back({json.at("word").get<std::string>(), json.at("doc_frequency").get<size_t>(),
                       json.at("n_occurrences").get<size_t>(), json.at("mean_score").get<double>()});
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParse, path + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  return stats;
}

struct ScatterFlags {
  std::string stats;
  std::string out;
  std::string csv;
};

int RunScatter(const ScatterFlags& f) {
  const std::vector<WordSaliencyStat> stats = ReadStats(f.stats);
  if (stats.empty()) throw Error(ErrorCode::kParse, f.stats + ": no statistics");
  WriteStringToFile(f.out, RenderScatter(stats));
  const fs::path csv = f.csv.empty() ? fs::path(f.out).replace_extension(".csv") : fs::path(f.csv);
  WriteStringToFile(csv, ScatterCsv(stats));
  return kExitOk;
}

struct HeatmapFlags {
  std::string model;
  std::string text;
  std::string in;
  std::string id;
  std::string out;
  std::string target = "logit";
};

int RunHeatmap(const HeatmapFlags& f) {
  if (f.text.empty() == f.id.empty() || (!f.id.empty() && f.in.empty())) {
    throw UsageError("heatmap needs --text, or --in with --id");
  }
  std::string text = f.text;
  std::string title = "Gradient x Input";
  if (!f.id.empty()) {
    bool found = false;
    for (const LabeledStatement& r : ReadJsonl(f.in)) {
      if (r.id == f.id) {
        text = r.text;
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorCode::kParse, f.in + ": no statement with id '" + f.id + "'");
    title += ": " + f.id;
  }
  const Model model = LoadModel(f.model);
  const SaliencyMap map = GxiSaliency(model.params, model.vocab, text, Label2::kFake, ParseTarget(f.target));
  WriteStringToFile(f.out, RenderHeatmap(map.tokens, map.scores, title));
  return kExitOk;
}

// verify-protocol -------------------------------------------------------------

struct VerifyFlags {
  std::string transcript;
  std::string report;
  ClassifierFlags classifier;
  bool generate = false;
  std::string model;
  std::string in;
  std::string out;
  double tolerance = 1e-9;
};

int RunVerify(const VerifyFlags& f, std::ostream& out, std::ostream& err) {
  if (f.generate) {
    if (f.model.empty() || f.in.empty() || f.out.empty()) {
      throw UsageError("--generate needs --model, --in and --out");
    }
    std::vector<PredictRequest> requests;
    for (const LabeledStatement& r : ReadJsonl(f.in)) requests.push_back({r.id, r.text, false});
    WriteStringToFile(f.out, MakeTranscript(LoadModel(f.model), requests, f.tolerance));
    return kExitOk;
  }
  if (f.transcript.empty() || f.classifier.classifier.empty()) {
    throw UsageError("verify-protocol needs --transcript and --classifier");
  }
  const std::string transcript = ReadFileToString(f.transcript);
  auto classifier = f.classifier.Open();
  const ConformanceReport report = VerifyTranscript(transcript, *classifier);
  for (const ConformanceLine& line : report.lines) {
    if (!line.pass) err << "verify-protocol: line " << line.line << " (" << line.id << "): " << line.message << "\n";
  }
  if (!f.report.empty()) WriteStringToFile(f.report, JsonFile(report.ToJson()));
  out << report.passed() << "/" << report.lines.size() << " lines pass\n";
  return report.ok() ? kExitOk : kExitData;
}

// serve ----------------------------------------------------------------------

struct ServeFlags {
  std::string model;
  std::string name;
  std::optional<uint16_t> port;
  bool once = false;
  bool bind_all = false;
};

int RunServe(const ServeFlags& f, std::ostream& err) {
  const std::string name = f.name.empty() ? fs::path(f.model).filename().string() : f.name;
  BuiltinHandler handler(LoadModel(f.model), name);
  if (!f.port) {
    FdTransport stdio(0, 1, /*owns_fds=*/false, "stdio");
    Serve(stdio, handler);
    return kExitOk;
  }
  TcpListener listener(*f.port, f.bind_all);
  err << "serve: listening on port " << listener.port() << std::endl;
  do {
    std::unique_ptr<FdTransport> connection = listener.Accept();
    try {
      Serve(*connection, handler);
    } catch (const ProtocolError& e) {
      err << "serve: " << e.what() << "\n";
    }
  } while (!f.once);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adversarial robustness harness for fake-news classifiers", "newsbreaker"};
  app.require_subcommand(1);
  app.fallthrough(false);

  IngestFlags ingest;
  CLI::App* ingest_cmd = app.add_subcommand("ingest", "Convert LIAR TSV or Kaggle CSV to JSON lines");
  ingest_cmd->add_option("--dataset", ingest.dataset)->required()->check(CLI::IsMember({"liar", "kaggle"}));
  ingest_cmd->add_option("--in", ingest.in)->required();
  ingest_cmd->add_option("--out", ingest.out);
  ingest_cmd->add_option("--field", ingest.field, "Kaggle text field")
      ->check(CLI::IsMember({"title", "title+body"}));
  ingest_cmd->add_flag("--strict", ingest.strict, "Fail on malformed rows instead of skipping them");
  ingest_cmd->add_option("--fake-value", ingest.fake_value, "Kaggle label value meaning fake");
  ingest_cmd->add_option("--real-value", ingest.real_value, "Kaggle label value meaning real");
  ingest_cmd->add_option("--split", ingest.split, "Train fraction of a seeded split")
      ->check(CLI::Range(0.0, 1.0));
  ingest_cmd->add_option("--train-out", ingest.train_out);
  ingest_cmd->add_option("--test-out", ingest.test_out);
  AddSeed(ingest_cmd, ingest.seed);

  TrainFlags train;
  CLI::App* train_cmd = app.add_subcommand("train", "Train the built-in classifier");
  train_cmd->add_option("--in", train.in)->required();
  train_cmd->add_option("--out", train.out)->required();
  train_cmd->add_option("--dim", train.config.dim)->check(CLI::PositiveNumber);
  train_cmd->add_option("--hidden", train.config.hidden)->check(CLI::PositiveNumber);
  train_cmd->add_option("--epochs", train.config.epochs)->check(CLI::PositiveNumber);
  train_cmd->add_option("--lr", train.config.learning_rate)->check(CLI::PositiveNumber);
  train_cmd->add_option("--batch", train.config.batch_size)->check(CLI::PositiveNumber);
  train_cmd->add_option("--l2", train.config.l2)->check(CLI::NonNegativeNumber);
  train_cmd->add_option("--min-freq", train.min_frequency)->check(CLI::PositiveNumber);
  AddSeed(train_cmd, train.seed);

  AttackCmdFlags attack;
  CLI::App* attack_cmd = app.add_subcommand("attack", "Generate adversarial pairs");
  attack_cmd->add_option("--kind", attack.kind)->required()->check(CLI::IsMember(kAttackNames));
  attack_cmd->add_option("--in", attack.in)->required();
  attack_cmd->add_option("--out", attack.out)->required();
  attack.attack.Add(attack_cmd);

  EvalFlags eval;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Score a classifier on original/attacked pairs");
  eval_cmd->add_option("--attack,--kind", eval.attack_kind)->check(CLI::IsMember(kAttackNames));
  eval_cmd->add_option("--in", eval.in, "Corpus to attack");
  eval_cmd->add_option("--pairs", eval.pairs, "Output of the attack subcommand");
  eval_cmd->add_option("--report", eval.report_dir, "Directory for report.json and report.md")->required();
  eval_cmd->add_option("--overrides", eval.overrides, "id,include|exclude per line");
  eval_cmd->add_option("--name", eval.name, "Row label in the table");
  eval.attack.Add(eval_cmd);
  eval.classifier.Add(eval_cmd);

  AccuracyFlags accuracy;
  CLI::App* accuracy_cmd = app.add_subcommand("accuracy", "Test-set accuracy of a classifier");
  accuracy_cmd->add_option("--in", accuracy.in)->required();
  accuracy_cmd->add_option("--out", accuracy.out, "Also write a JSON summary");
  accuracy.classifier.Add(accuracy_cmd);

  SaliencyFlags saliency;
  CLI::App* saliency_cmd = app.add_subcommand("saliency", "Per-word Gradient x Input statistics");
  saliency_cmd->add_option("--model", saliency.model)->required();
  saliency_cmd->add_option("--in", saliency.in)->required();
  saliency_cmd->add_option("--out", saliency.out)->required();
  saliency_cmd->add_option("--target", saliency.target)->check(CLI::IsMember({"logit", "probability"}));
  saliency_cmd->add_option("--top", saliency.top, "Words printed to standard output");

  ScatterFlags scatter;
  CLI::App* scatter_cmd = app.add_subcommand("scatter", "Frequency vs. saliency plot with CSV sidecar");
  scatter_cmd->add_option("--stats", scatter.stats, "Output of the saliency subcommand")->required();
  scatter_cmd->add_option("--out", scatter.out)->required();
  scatter_cmd->add_option("--csv", scatter.csv, "Sidecar path (default: --out with .csv)");

  HeatmapFlags heatmap;
  CLI::App* heatmap_cmd = app.add_subcommand("heatmap", "Token saliency heatmap for one statement");
  heatmap_cmd->add_option("--model", heatmap.model)->required();
  heatmap_cmd->add_option("--text", heatmap.text);
  heatmap_cmd->add_option("--in", heatmap.in);
  heatmap_cmd->add_option("--id", heatmap.id);
  heatmap_cmd->add_option("--out", heatmap.out)->required();
  heatmap_cmd->add_option("--target", heatmap.target)->check(CLI::IsMember({"logit", "probability"}));

  VerifyFlags verify;
  CLI::App* verify_cmd = app.add_subcommand("verify-protocol", "Replay a golden transcript against a classifier");
  verify_cmd->add_option("--transcript", verify.transcript);
  verify_cmd->add_option("--report", verify.report, "Write the conformance report as JSON");
  verify_cmd->add_option("--classifier", verify.classifier.classifier, "builtin:PATH | cmd:COMMAND | tcp:HOST:PORT");
  verify_cmd->add_option("--jobs", verify.classifier.jobs)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--window", verify.classifier.window)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--timeout-ms", verify.classifier.timeout_ms)->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--generate", verify.generate, "Write a transcript from a built-in model instead");
  verify_cmd->add_option("--model", verify.model);
  verify_cmd->add_option("--in", verify.in);
  verify_cmd->add_option("--out", verify.out);
  verify_cmd->add_option("--tolerance", verify.tolerance)->check(CLI::NonNegativeNumber);

  ServeFlags serve;
  CLI::App* serve_cmd = app.add_subcommand("serve", "Serve a built-in model over the protocol");
  serve_cmd->add_option("--model", serve.model)->required();
  serve_cmd->add_option("--name", serve.name, "model_name announced in hello");
  serve_cmd->add_option("--port", serve.port, "Listen on TCP instead of standard input/output");
  serve_cmd->add_flag("--once", serve.once, "Exit after the first TCP connection");
  serve_cmd->add_flag("--bind-all", serve.bind_all, "Listen on all interfaces, not just loopback");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (ingest_cmd->parsed()) return RunIngest(ingest, err);
    if (train_cmd->parsed()) return RunTrain(train, err);
    if (attack_cmd->parsed()) return RunAttackCmd(attack, err);
    if (eval_cmd->parsed()) return RunEval(eval, out, err);
    if (accuracy_cmd->parsed()) return RunAccuracy(accuracy, out);
    if (saliency_cmd->parsed()) return RunSaliency(saliency, out);
    if (scatter_cmd->parsed()) return RunScatter(scatter);
    if (heatmap_cmd->parsed()) return RunHeatmap(heatmap);
    if (verify_cmd->parsed()) return RunVerify(verify, out, err);
    if (serve_cmd->parsed()) return RunServe(serve, err);
  } catch (const UsageError& e) {
    err << "newsbreaker: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const ProtocolError& e) {
    err << "newsbreaker: protocol error (" << ProtocolErrorKindName(e.kind()) << "): " << e.what() << "\n";
    return kExitData;
  } catch (const Error& e) {
    err << "newsbreaker: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    err << "newsbreaker: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace newsbreaker
