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

// Newline-delimited JSON protocol between the evaluation harness and any
// classifier, plus the client/server halves and golden-transcript replay.
// The message grammar is documented in docs/protocol.md.

#ifndef NEWSBREAKER_PROTOCOL_H_
#define NEWSBREAKER_PROTOCOL_H_

#include <chrono>
#include <set>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "newsbreaker/classifier.h"
#include "newsbreaker/error.h"
#include "newsbreaker/transport.h"

namespace newsbreaker {

inline constexpr int kProtocolVersion = 1;
inline constexpr double kProbabilitySumTolerance = 1e-6;

struct Hello {
  int protocol_version = kProtocolVersion;
  std::vector<std::string> labels = {"real", "fake"};
  bool supports_saliency = false;
  std::string model_name;
};

struct PredictRequest {
  std::string id;
  std::string text;
  bool want_saliency = false;
};

struct PredictResponse {
  std::string id;
  ClassProbs probs;
  std::optional<std::vector<std::pair<std::string, double>>> token_saliency;
};

nlohmann::ordered_json EncodeHello(const Hello& hello);
nlohmann::ordered_json EncodeRequest(const PredictRequest& request);
nlohmann::ordered_json EncodeResponse(const PredictResponse& response);
nlohmann::ordered_json EncodeError(const std::optional<std::string>& id,
                                   const std::string& message);
nlohmann::ordered_json EncodeShutdown();

// Parses and validates a hello line. Throws ProtocolError with kind
// kMalformedMessage, kVersionMismatch or kLabelSchema.
Hello DecodeHello(std::string_view line);

// Checks a response's probabilities against the announced labels and
// renormalizes sums within kProbabilitySumTolerance of one. Throws
// ProtocolError(kMalformedMessage | kLabelSchema | kNormalization).
PredictResponse DecodeResponse(const nlohmann::json& message,
                               const std::vector<std::string>& labels);

struct SessionOptions {
  std::chrono::milliseconds timeout{10000};
  // Maximum number of requests in flight.
  size_t window = 16;
};

struct PredictResult {
  std::string id;
  std::optional<PredictResponse> response;
  std::optional<ProtocolErrorKind> error_kind;
  std::string error;

  bool ok() const { return response.has_value(); }
};

// Client end of one protocol session. Not shareable between threads.
class ClientSession {
 public:
  explicit ClientSession(std::unique_ptr<Transport> transport, SessionOptions options = {});
  ~ClientSession();

  ClientSession(const ClientSession&) = delete;
  ClientSession& operator=(const ClientSession&) = delete;

  // Reads the server's hello. Must precede Predict.
  const Hello& Handshake();
  const Hello& hello() const { return *hello_; }

  // Sends requests pipelined up to the window and returns one result per
  // request, in request order. Ids must be distinct within a call.
  // Per-request failures (timeouts, server errors, bad probabilities) are
  // reported in the result; a response for an unknown id, an unparseable
  // line or the server going away throws ProtocolError.
  std::vector<PredictResult> Predict(const std::vector<PredictRequest>& requests);

  void Shutdown();

 private:
  std::unique_ptr<Transport> transport_;
  SessionOptions options_;
  std::optional<Hello> hello_;
  // Ids given up on after a timeout; late responses for them are dropped.
  std::set<std::string> abandoned_;
  bool shut_down_ = false;
};

class PredictHandler {
 public:
  virtual ~PredictHandler() = default;
  virtual Hello MakeHello() const = 0;
  virtual PredictResponse Handle(const PredictRequest& request) const = 0;
};

// Serves the built-in model; saliency is fake-class Gradient x Input.
class BuiltinHandler : public PredictHandler {
 public:
  BuiltinHandler(Model model, std::string name);

  Hello MakeHello() const override;
  PredictResponse Handle(const PredictRequest& request) const override;

 private:
  Model model_;
  std::string name_;
};

// Writes hello, then answers requests until shutdown or end of input.
// Malformed lines and handler failures are answered with error messages.
void Serve(Transport& transport, const PredictHandler& handler);

// A classifier the harness can query: in-process or over the protocol.
class ClassifierClient {
 public:
  virtual ~ClassifierClient() = default;
  virtual std::string name() const = 0;
  // One result per request, in request order.
  virtual std::vector<PredictResult> PredictBatch(const std::vector<PredictRequest>& requests) = 0;
};

class BuiltinClient : public ClassifierClient {
 public:
  BuiltinClient(Model model, std::string name, size_t jobs = 1);

  std::string name() const override { return name_; }
  std::vector<PredictResult> PredictBatch(const std::vector<PredictRequest>& requests) override;
  const Model& model() const { return model_; }

 private:
  Model model_;
  std::string name_;
  size_t jobs_;
};

class RemoteClient : public ClassifierClient {
 public:
  // Performs the handshake.
  RemoteClient(std::unique_ptr<Transport> transport, SessionOptions options);

  std::string name() const override { return session_.hello().model_name; }
  std::vector<PredictResult> PredictBatch(const std::vector<PredictRequest>& requests) override;

 private:
  ClientSession session_;
};

// "builtin:PATH", "cmd:COMMAND" or "tcp:HOST:PORT".
struct ClassifierSource {
  enum class Kind { kBuiltin, kCommand, kTcp };
  Kind kind = Kind::kBuiltin;
  std::string target;  // path, command or host
  uint16_t port = 0;
};

// Throws Error(kInvalidArgument) on a malformed specification.
ClassifierSource ParseClassifierSource(std::string_view spec);

std::unique_ptr<ClassifierClient> OpenClassifier(const ClassifierSource& source,
                                                 const SessionOptions& options, size_t jobs = 1);

// Golden transcripts: one {"request", "expected_probs", "tolerance"} object
// per line.
struct ConformanceLine {
  size_t line = 0;
  std::string id;
  bool pass = false;
  double max_abs_diff = 0.0;
  std::string message;
};

struct ConformanceReport {
  std::vector<ConformanceLine> lines;

  size_t passed() const;
  size_t failed() const { return lines.size() - passed(); }
  bool ok() const { return failed() == 0; }
  nlohmann::ordered_json ToJson() const;
};

ConformanceReport VerifyTranscript(std::string_view transcript, ClassifierClient& classifier);

// Transcript of the built-in model's own answers for `requests`.
std::string MakeTranscript(const Model& model, const std::vector<PredictRequest>& requests,
                           double tolerance);

}  // namespace newsbreaker

#endif  // NEWSBREAKER_PROTOCOL_H_
