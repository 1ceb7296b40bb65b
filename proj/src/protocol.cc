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

#include "newsbreaker/protocol.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <map>
#include <thread>

#include "newsbreaker/dataset.h"

namespace newsbreaker {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void Fail(ProtocolErrorKind kind, const std::string& message) {
  throw ProtocolError(kind, message);
}

json ParseMessage(std::string_view line) {
  json message = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (message.is_discarded()) {
    Fail(ProtocolErrorKind::kMalformedMessage, "not valid JSON: " + std::string(line.substr(0, 200)));
  }
  if (!message.is_object()) Fail(ProtocolErrorKind::kMalformedMessage, "message is not a JSON object");
  auto type = message.find("type");
  if (type == message.end() || !type->is_string()) {
    Fail(ProtocolErrorKind::kMalformedMessage, "message has no string 'type'");
  }
  return message;
}

std::optional<std::string> OptionalId(const json& message) {
  auto it = message.find("id");
  if (it == message.end() || !it->is_string()) return std::nullopt;
  return it->get<std::string>();
}

std::string BlankIfAllSpace(std::string_view line) {
  for (char c : line) {
    if (c != ' ' && c != '\t' && c != '\r') return std::string(line);
  }
  return {};
}

PredictResponse PredictBuiltin(const Model& model, const PredictRequest& request) {
  PredictResponse response;
  response.id = request.id;
  response.probs = Predict(model.params, model.vocab, request.text);
  if (request.want_saliency) {
    SaliencyMap map = GxiSaliency(model.params, model.vocab, request.text, Label2::kFake);
    std::vector<std::pair<std::string, double>> saliency;
    saliency.reserve(map.tokens.size());
    for (size_t i = 0; i < map.tokens.size(); ++i) saliency.emplace_back(map.tokens[i], map.scores[i]);
    response.token_saliency = std::move(saliency);
  }
  return response;
}

void CheckDistinctIds(const std::vector<PredictRequest>& requests) {
  std::set<std::string_view> ids;
  for (const PredictRequest& request : requests) {
    if (!ids.insert(request.id).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate request id '" + request.id + "'");
    }
  }
}

}  // namespace

ordered_json EncodeHello(const Hello& hello) {
  ordered_json out;
  out["type"] = "hello";
  out["protocol_version"] = hello.protocol_version;
  out["labels"] = hello.labels;
  out["supports_saliency"] = hello.supports_saliency;
  out["model_name"] = hello.model_name;
  return out;
}

ordered_json EncodeRequest(const PredictRequest& request) {
  ordered_json out;
  out["type"] = "predict";
  out["id"] = request.id;
  out["text"] = request.text;
  if (request.want_saliency) out["want_saliency"] = true;
  return out;
}

ordered_json EncodeResponse(const PredictResponse& response) {
  ordered_json out;
  out["type"] = "response";
  out["id"] = response.id;
  out["probs"] = {{"real", response.probs.p_real}, {"fake", response.probs.p_fake}};
  if (response.token_saliency) {
    ordered_json tokens = ordered_json::array();
    for (const auto& [token, score] : *response.token_saliency) tokens.push_back({token, score});
    out["token_saliency"] = std::move(tokens);
  }
  return out;
}

ordered_json EncodeError(const std::optional<std::string>& id, const std::string& message) {
  ordered_json out;
  out["type"] = "error";
  if (id) out["id"] = *id;
  out["message"] = message;
  return out;
}

ordered_json EncodeShutdown() { return ordered_json{{"type", "shutdown"}}; }

Hello DecodeHello(std::string_view line) {
  const json message = ParseMessage(line);
  if (message["type"] != "hello") {
    Fail(ProtocolErrorKind::kMalformedMessage,
         "expected hello, got '" + message["type"].get<std::string>() + "'");
  }
  Hello hello;
  auto version = message.find("protocol_version");
  if (version == message.end() || !version->is_number_integer()) {
    Fail(ProtocolErrorKind::kMalformedMessage, "hello has no integer protocol_version");
  }
  if (version->get<int64_t>() != kProtocolVersion) {
    Fail(ProtocolErrorKind::kVersionMismatch,
         "server speaks protocol version " + version->dump() + ", client speaks " +
             std::to_string(kProtocolVersion));
  }
  hello.protocol_version = kProtocolVersion;

  auto labels = message.find("labels");
  if (labels == message.end() || !labels->is_array()) {
    Fail(ProtocolErrorKind::kMalformedMessage, "hello has no labels array");
  }
  hello.labels.clear();
  for (const json& label : *labels) {
    if (!label.is_string()) Fail(ProtocolErrorKind::kMalformedMessage, "hello label is not a string");
    hello.labels.push_back(label.get<std::string>());
  }
  std::vector<std::string> sorted = hello.labels;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::vector<std::string>{"fake", "real"}) {
    Fail(ProtocolErrorKind::kLabelSchema, "hello labels must be exactly \"real\" and \"fake\", got " +
                                              labels->dump());
  }

  if (auto it = message.find("supports_saliency"); it != message.end()) {
    if (!it->is_boolean()) Fail(ProtocolErrorKind::kMalformedMessage, "supports_saliency is not a boolean");
    hello.supports_saliency = it->get<bool>();
  }
  if (auto it = message.find("model_name"); it != message.end()) {
    if (!it->is_string()) Fail(ProtocolErrorKind::kMalformedMessage, "model_name is not a string");
    hello.model_name = it->get<std::string>();
  }
  return hello;
}

PredictResponse DecodeResponse(const json& message, const std::vector<std::string>& labels) {
  PredictResponse response;
  auto id = message.find("id");
  if (id == message.end() || !id->is_string()) {
    Fail(ProtocolErrorKind::kMalformedMessage, "response has no string id");
  }
  response.id = id->get<std::string>();

  auto probs = message.find("probs");
  if (probs == message.end() || !probs->is_object()) {
    Fail(ProtocolErrorKind::kMalformedMessage, "response '" + response.id + "' has no probs object");
  }
  if (probs->size() != labels.size()) {
    Fail(ProtocolErrorKind::kLabelSchema,
         "response '" + response.id + "' probs keys differ from the announced labels");
  }
  double values[2] = {0.0, 0.0};
  for (const std::string& label : labels) {
    auto value = probs->find(label);
    if (value == probs->end()) {
      Fail(ProtocolErrorKind::kLabelSchema, "response '" + response.id + "' lacks label '" + label + "'");
    }
    if (!value->is_number() || !std::isfinite(value->get<double>())) {
      Fail(ProtocolErrorKind::kMalformedMessage,
           "response '" + response.id + "' probability for '" + label + "' is not a finite number");
    }
    const double p = value->get<double>();
    if (p < 0.0 || p > 1.0) {
      Fail(ProtocolErrorKind::kNormalization,
           "response '" + response.id + "' probability " + value->dump() + " is outside [0, 1]");
    }
    values[label == "real" ? kRealIndex : kFakeIndex] = p;
  }
  const double sum = values[0] + values[1];
  if (std::fabs(sum - 1.0) > kProbabilitySumTolerance) {
    Fail(ProtocolErrorKind::kNormalization,
         "response '" + response.id + "' probabilities sum to " + json(sum).dump());
  }
  response.probs = {values[0] / sum, values[1] / sum};

  if (auto it = message.find("token_saliency"); it != message.end() && !it->is_null()) {
    if (!it->is_array()) Fail(ProtocolErrorKind::kMalformedMessage, "token_saliency is not an array");
    std::vector<std::pair<std::string, double>> saliency;
    for (const json& entry : *it) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() || !entry[1].is_number()) {
        Fail(ProtocolErrorKind::kMalformedMessage, "token_saliency entries must be [token, score]");
      }
      saliency.emplace_back(entry[0].get<std::string>(), entry[1].get<double>());
    }
    response.token_saliency = std::move(saliency);
  }
  return response;
}

ClientSession::ClientSession(std::unique_ptr<Transport> transport, SessionOptions options)
    : transport_(std::move(transport)), options_(options) {
  if (options_.window == 0) throw Error(ErrorCode::kInvalidArgument, "pipelining window must be positive");
}

ClientSession::~ClientSession() {
  try {
    Shutdown();
  } catch (const std::exception&) {
  }
}

const Hello& ClientSession::Handshake() {
  std::string line;
  while (true) {
    switch (transport_->ReadLine(line, options_.timeout)) {
      case ReadStatus::kTimeout:
        Fail(ProtocolErrorKind::kTimeout, "no hello from " + transport_->Describe() + " within " +
                                              std::to_string(options_.timeout.count()) + " ms");
      case ReadStatus::kEof:
        Fail(ProtocolErrorKind::kTransport, transport_->Describe() + " closed before sending hello");
      case ReadStatus::kLine:
        break;
    }
    if (!BlankIfAllSpace(line).empty()) break;
  }
  hello_ = DecodeHello(line);
  return *hello_;
}

std::vector<PredictResult> ClientSession::Predict(const std::vector<PredictRequest>& requests) {
  if (!hello_) throw Error(ErrorCode::kInvalidArgument, "Predict called before Handshake");
  if (shut_down_) throw Error(ErrorCode::kInvalidArgument, "Predict called after Shutdown");
  CheckDistinctIds(requests);

  std::vector<PredictResult> results(requests.size());
  std::map<std::string, size_t> in_flight;
  size_t next = 0;
  size_t done = 0;
  std::string line;
  while (done < requests.size()) {
    while (next < requests.size() && in_flight.size() < options_.window) {
      PredictRequest request = requests[next];
      request.want_saliency = request.want_saliency && hello_->supports_saliency;
      results[next].id = request.id;
      abandoned_.erase(request.id);
      transport_->WriteLine(DumpJsonLine(EncodeRequest(request)));
      in_flight.emplace(request.id, next);
      ++next;
    }

    const ReadStatus status = transport_->ReadLine(line, options_.timeout);
    if (status == ReadStatus::kTimeout) {
      for (const auto& [id, index] : in_flight) {
        results[index].error_kind = ProtocolErrorKind::kTimeout;
        results[index].error = "no response within " + std::to_string(options_.timeout.count()) + " ms";
        abandoned_.insert(id);
      }
      done += in_flight.size();
      in_flight.clear();
      continue;
    }
    if (status == ReadStatus::kEof) {
      Fail(ProtocolErrorKind::kTransport, transport_->Describe() + " closed with " +
                                              std::to_string(in_flight.size()) + " requests pending");
    }
    if (BlankIfAllSpace(line).empty()) continue;

    const json message = ParseMessage(line);
    const std::string type = message["type"].get<std::string>();
    if (type != "response" && type != "error") {
      Fail(ProtocolErrorKind::kMalformedMessage, "unexpected message type '" + type + "'");
    }
    const std::optional<std::string> id = OptionalId(message);
    if (!id) {
      if (type == "error") {
        Fail(ProtocolErrorKind::kServerError, "server error: " + message.value("message", std::string()));
      }
      Fail(ProtocolErrorKind::kMalformedMessage, "response has no string id");
    }
    auto it = in_flight.find(*id);
    if (it == in_flight.end()) {
      if (abandoned_.count(*id) > 0) continue;
      Fail(ProtocolErrorKind::kUnknownId, "response for unknown id '" + *id + "'");
    }
    PredictResult& result = results[it->second];
    if (type == "error") {
      result.error_kind = ProtocolErrorKind::kServerError;
      result.error = message.value("message", std::string("unspecified server error"));
    } else {
      try {
        result.response = DecodeResponse(message, hello_->labels);
      } catch (const ProtocolError& e) {
        result.error_kind = e.kind();
        result.error = e.what();
      }
    }
    in_flight.erase(it);
    ++done;
  }
  return results;
}

void ClientSession::Shutdown() {
  if (shut_down_ || !hello_) return;
  shut_down_ = true;
  transport_->WriteLine(DumpJsonLine(EncodeShutdown()));
}

BuiltinHandler::BuiltinHandler(Model model, std::string name)
    : model_(std::move(model)), name_(std::move(name)) {}

Hello BuiltinHandler::MakeHello() const {
  Hello hello;
  hello.supports_saliency = true;
  hello.model_name = name_;
  return hello;
}

PredictResponse BuiltinHandler::Handle(const PredictRequest& request) const {
  return PredictBuiltin(model_, request);
}

void Serve(Transport& transport, const PredictHandler& handler) {
  transport.WriteLine(DumpJsonLine(EncodeHello(handler.MakeHello())));
  std::string line;
  while (transport.ReadLine(line, std::chrono::milliseconds(-1)) == ReadStatus::kLine) {
    if (BlankIfAllSpace(line).empty()) continue;
    json message;
    try {
      message = ParseMessage(line);
    } catch (const ProtocolError& e) {
      transport.WriteLine(DumpJsonLine(EncodeError(std::nullopt, e.what())));
      continue;
    }
    const std::string type = message["type"].get<std::string>();
    const std::optional<std::string> id = OptionalId(message);
    if (type == "shutdown") return;
    if (type != "predict") {
      transport.WriteLine(DumpJsonLine(EncodeError(id, "unexpected message type '" + type + "'")));
      continue;
    }
    auto text = message.find("text");
    auto want = message.find("want_saliency");
    if (!id || text == message.end() || !text->is_string() ||
        (want != message.end() && !want->is_boolean())) {
      transport.WriteLine(
          DumpJsonLine(EncodeError(id, "predict needs string id and text, optional boolean want_saliency")));
      continue;
    }
    PredictRequest request{*id, text->get<std::string>(), want != message.end() && want->get<bool>()};
    std::string reply;
    try {
      reply = DumpJsonLine(EncodeResponse(handler.Handle(request)));
    } catch (const std::exception& e) {
      reply = DumpJsonLine(EncodeError(id, e.what()));
    }
    transport.WriteLine(reply);
  }
}

BuiltinClient::BuiltinClient(Model model, std::string name, size_t jobs)
    : model_(std::move(model)), name_(std::move(name)), jobs_(std::max<size_t>(jobs, 1)) {}

std::vector<PredictResult> BuiltinClient::PredictBatch(const std::vector<PredictRequest>& requests) {
  CheckDistinctIds(requests);
  std::vector<PredictResult> results(requests.size());
  auto work = [&](size_t begin, size_t step) {
    for (size_t i = begin; i < requests.size(); i += step) {
      results[i].id = requests[i].id;
      results[i].response = PredictBuiltin(model_, requests[i]);
    }
  };
  const size_t jobs = std::min(jobs_, std::max<size_t>(requests.size(), 1));
  if (jobs == 1) {
    work(0, 1);
    return results;
  }
  std::vector<std::thread> threads;
  for (size_t j = 0; j < jobs; ++j) threads.emplace_back(work, j, jobs);
  for (std::thread& t : threads) t.join();
  return results;
}

RemoteClient::RemoteClient(std::unique_ptr<Transport> transport, SessionOptions options)
    : session_(std::move(transport), options) {
  session_.Handshake();
}

std::vector<PredictResult> RemoteClient::PredictBatch(const std::vector<PredictRequest>& requests) {
  return session_.Predict(requests);
}

ClassifierSource ParseClassifierSource(std::string_view spec) {
  auto bad = [&](const std::string& why) -> ClassifierSource {
    throw Error(ErrorCode::kInvalidArgument, "bad classifier '" + std::string(spec) + "': " + why);
  };
  const size_t colon = spec.find(':');
  if (colon == std::string_view::npos) return bad("expected builtin:PATH, cmd:COMMAND or tcp:HOST:PORT");
  const std::string_view scheme = spec.substr(0, colon);
  const std::string_view rest = spec.substr(colon + 1);
  if (rest.empty()) return bad("empty target");
  ClassifierSource source;
  if (scheme == "builtin") {
    source.kind = ClassifierSource::Kind::kBuiltin;
    source.target = rest;
  } else if (scheme == "cmd") {
    source.kind = ClassifierSource::Kind::kCommand;
    source.target = rest;
  } else if (scheme == "tcp") {
    source.kind = ClassifierSource::Kind::kTcp;
    const size_t port_colon = rest.rfind(':');
    if (port_colon == std::string_view::npos || port_colon == 0) return bad("expected tcp:HOST:PORT");
    source.target = rest.substr(0, port_colon);
    const std::string_view port = rest.substr(port_colon + 1);
    unsigned long value = 0;
    if (port.empty() || port.size() > 5 || !std::all_of(port.begin(), port.end(), ::isdigit)) {
      return bad("port is not a number");
    }
    value = std::stoul(std::string(port));
    if (value == 0 || value > 65535) return bad("port out of range");
    source.port = static_cast<uint16_t>(value);
  } else {
    return bad("unknown scheme '" + std::string(scheme) + "'");
  }
  return source;
}

std::unique_ptr<ClassifierClient> OpenClassifier(const ClassifierSource& source,
                                                 const SessionOptions& options, size_t jobs) {
  switch (source.kind) {
    case ClassifierSource::Kind::kBuiltin:
      return std::make_unique<BuiltinClient>(LoadModel(source.target),
                                             std::filesystem::path(source.target).filename().string(), jobs);
    case ClassifierSource::Kind::kCommand:
      return std::make_unique<RemoteClient>(SubprocessTransport::Spawn(source.target), options);
    case ClassifierSource::Kind::kTcp:
      return std::make_unique<RemoteClient>(ConnectTcp(source.target, source.port, options.timeout), options);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown classifier source");
}

size_t ConformanceReport::passed() const {
  return static_cast<size_t>(
      std::count_if(lines.begin(), lines.end(), [](const ConformanceLine& line) { return line.pass; }));
}

ordered_json ConformanceReport::ToJson() const {
  ordered_json out;
  out["n_lines"] = lines.size();
  out["n_passed"] = passed();
  out["n_failed"] = failed();
  ordered_json entries = ordered_json::array();
  for (const ConformanceLine& line : lines) {
    ordered_json entry;
    entry["line"] = line.line;
    entry["id"] = line.id;
    entry["pass"] = line.pass;
    entry["max_abs_diff"] = line.max_abs_diff;
    entry["message"] = line.message;
    entries.push_back(std::move(entry));
  }
  out["lines"] = std::move(entries);
  return out;
}

ConformanceReport VerifyTranscript(std::string_view transcript, ClassifierClient& classifier) {
  struct Expected {
    size_t report_index;
    ClassProbs probs;
    double tolerance;
  };
  ConformanceReport report;
  std::vector<PredictRequest> requests;
  std::vector<Expected> expected;
  std::set<std::string> ids;

  size_t line_number = 0;
  size_t pos = 0;
  while (pos < transcript.size()) {
    size_t end = transcript.find('\n', pos);
    if (end == std::string_view::npos) end = transcript.size();
    const std::string line = BlankIfAllSpace(transcript.substr(pos, end - pos));
    pos = end + 1;
    ++line_number;
    if (line.empty()) continue;

    ConformanceLine entry;
    entry.line = line_number;
    try {
      const json object = json::parse(line);
      const json& request = object.at("request");
      const json& probs = object.at("expected_probs");
      entry.id = request.at("id").get<std::string>();
      PredictRequest predict{entry.id, request.at("text").get<std::string>(), false};
      const double tolerance = object.at("tolerance").get<double>();
      if (!(tolerance >= 0.0)) throw std::invalid_argument("tolerance must be non-negative");
      if (!ids.insert(entry.id).second) throw std::invalid_argument("duplicate id '" + entry.id + "'");
      expected.push_back({report.lines.size(), {probs.at("real").get<double>(), probs.at("fake").get<double>()},
                          tolerance});
      requests.push_back(std::move(predict));
    } catch (const std::exception& e) {
      entry.message = std::string("unreadable transcript line: ") + e.what();
    }
    report.lines.push_back(std::move(entry));
  }

  if (requests.empty()) return report;
  std::vector<PredictResult> results;
  try {
    results = classifier.PredictBatch(requests);
  } catch (const std::exception& e) {
    for (const Expected& want : expected) report.lines[want.report_index].message = e.what();
    return report;
  }
  for (size_t i = 0; i < expected.size(); ++i) {
    ConformanceLine& entry = report.lines[expected[i].report_index];
    const PredictResult& result = results[i];
    if (!result.ok()) {
      entry.message = result.error;
      continue;
    }
    const ClassProbs& got = result.response->probs;
    entry.max_abs_diff = std::max(std::fabs(got.p_real - expected[i].probs.p_real),
                                  std::fabs(got.p_fake - expected[i].probs.p_fake));
    entry.pass = entry.max_abs_diff <= expected[i].tolerance;
    if (!entry.pass) {
      entry.message = "probabilities differ by " + json(entry.max_abs_diff).dump() + " > tolerance " +
                      json(expected[i].tolerance).dump();
    }
  }
  return report;
}

std::string MakeTranscript(const Model& model, const std::vector<PredictRequest>& requests,
                           double tolerance) {
  std::string out;
  for (const PredictRequest& request : requests) {
    const ClassProbs probs = Predict(model.params, model.vocab, request.text);
    ordered_json line;
    line["request"] = {{"id", request.id}, {"text", request.text}};
    line["expected_probs"] = {{"real", probs.p_real}, {"fake", probs.p_fake}};
    line["tolerance"] = tolerance;
    out += DumpJsonLine(line);
    out += '\n';
  }
  return out;
}

}  // namespace newsbreaker
