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

#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"
#include "newsbreaker/error.h"
#include "newsbreaker/io.h"
#include "newsbreaker/protocol.h"
#include "newsbreaker/transport.h"
#include "test_support.h"

namespace newsbreaker {
namespace {

using namespace std::chrono_literals;
using nlohmann::json;
using testing::ShellQuote;
using testing::TestDataPath;
using testing::ThrownCode;
using testing::ThrownProtocolKind;

const std::string kHelloLine =
    R"({"type":"hello","protocol_version":1,"labels":["real","fake"],"supports_saliency":false,"model_name":"stub"})";

std::string ResponseLine(const std::string& id, double p_real, double p_fake) {
  return json{{"type", "response"}, {"id", id}, {"probs", {{"real", p_real}, {"fake", p_fake}}}}.dump();
}

// Runs `script` as the server end of a socket pair on its own thread.
class ScriptedServer {
 public:
  explicit ScriptedServer(std::function<void(FdTransport&)> script) {
    auto [client, server] = MakeSocketPair();
    client_ = std::move(client);
    thread_ = std::thread([server = std::move(server), script = std::move(script)]() mutable {
      try {
        script(*server);
      } catch (const std::exception&) {
      }
    });
  }
  ~ScriptedServer() {
    if (thread_.joinable()) thread_.join();
  }

  std::unique_ptr<Transport> TakeClientEnd() { return std::move(client_); }

 private:
  std::unique_ptr<FdTransport> client_;
  std::thread thread_;
};

std::string ReadOrEmpty(FdTransport& transport) {
  std::string line;
  return transport.ReadLine(line, 5000ms) == ReadStatus::kLine ? line : "";
}

// Reads `n` predict requests and returns their ids in arrival order.
std::vector<std::string> ReadRequests(FdTransport& transport, size_t n) {
  std::vector<std::string> ids;
  while (ids.size() < n) {
    const std::string line = ReadOrEmpty(transport);
    if (line.empty()) break;
    const json message = json::parse(line);
    if (message["type"] == "predict") ids.push_back(message["id"]);
  }
  return ids;
}

void DrainUntilClosed(FdTransport& transport) {
  std::string line;
  while (transport.ReadLine(line, 5000ms) == ReadStatus::kLine) {
  }
}

SessionOptions FastOptions() {
  SessionOptions options;
  options.timeout = 2000ms;
  return options;
}

std::vector<PredictRequest> Requests(std::vector<std::string> ids) {
  std::vector<PredictRequest> requests;
  for (std::string& id : ids) requests.push_back({id, "text for " + id, false});
  return requests;
}

Model FixtureModel() {
  static const Model* model = new Model(LoadModel(TestDataPath("fixture_model.bin")));
  return *model;
}

std::vector<PredictRequest> FixtureRequests(size_t n) {
  const SplitResult split = testing::PinnedKaggleSplit();
  std::vector<PredictRequest> requests;
  for (size_t i = 0; i < n && i < split.test.size(); ++i) {
    requests.push_back({split.test[i].id, split.test[i].text, false});
  }
  return requests;
}

TEST(CodecTest, HelloRoundTrip) {
  Hello hello;
  hello.supports_saliency = true;
  hello.model_name = "m";
  const Hello decoded = DecodeHello(EncodeHello(hello).dump());
  EXPECT_EQ(decoded.protocol_version, 1);
  EXPECT_EQ(decoded.labels, (std::vector<std::string>{"real", "fake"}));
  EXPECT_TRUE(decoded.supports_saliency);
  EXPECT_EQ(decoded.model_name, "m");
}

TEST(CodecTest, HelloAcceptsEitherLabelOrder) {
  const Hello hello = DecodeHello(
      R"({"type":"hello","protocol_version":1,"labels":["fake","real"],"supports_saliency":false,"model_name":"x"})");
  EXPECT_EQ(hello.labels, (std::vector<std::string>{"fake", "real"}));
}

TEST(CodecTest, HelloErrorsAreDistinct) {
  EXPECT_EQ(ThrownProtocolKind([] {
              DecodeHello(R"({"type":"hello","protocol_version":2,"labels":["real","fake"],"model_name":"x"})");
            }),
            ProtocolErrorKind::kVersionMismatch);
  EXPECT_EQ(ThrownProtocolKind([] {
              DecodeHello(R"({"type":"hello","protocol_version":1,"labels":["true","false"],"model_name":"x"})");
            }),
            ProtocolErrorKind::kLabelSchema);
  EXPECT_EQ(ThrownProtocolKind([] {
              DecodeHello(R"({"type":"hello","protocol_version":1,"labels":["real","fake","maybe"]})");
            }),
            ProtocolErrorKind::kLabelSchema);
  EXPECT_EQ(ThrownProtocolKind([] { DecodeHello("not json"); }), ProtocolErrorKind::kMalformedMessage);
  EXPECT_EQ(ThrownProtocolKind([] { DecodeHello(R"({"type":"response"})"); }),
            ProtocolErrorKind::kMalformedMessage);
  EXPECT_EQ(ThrownProtocolKind([] { DecodeHello(R"({"type":"hello","labels":["real","fake"]})"); }),
            ProtocolErrorKind::kMalformedMessage);
}

TEST(CodecTest, RequestOmitsSaliencyFlagUnlessSet) {
  EXPECT_EQ(EncodeRequest({"a", "t", false}).dump(), R"({"type":"predict","id":"a","text":"t"})");
  EXPECT_EQ(EncodeRequest({"a", "t", true}).dump(),
            R"({"type":"predict","id":"a","text":"t","want_saliency":true})");
  EXPECT_EQ(EncodeShutdown().dump(), R"({"type":"shutdown"})");
  EXPECT_EQ(EncodeError(std::nullopt, "bad").dump(), R"({"type":"error","message":"bad"})");
}

TEST(CodecTest, ResponseValidation) {
  const std::vector<std::string> labels = {"real", "fake"};
  const PredictResponse ok = DecodeResponse(json::parse(ResponseLine("a", 0.25, 0.75)), labels);
  EXPECT_EQ(ok.probs.p_fake, 0.75);

  const PredictResponse noisy = DecodeResponse(json::parse(ResponseLine("a", 0.3, 0.7000005)), labels);
  EXPECT_NEAR(noisy.probs.p_real + noisy.probs.p_fake, 1.0, 1e-15);

  EXPECT_EQ(ThrownProtocolKind([&] { DecodeResponse(json::parse(ResponseLine("a", 0.7, 0.7)), labels); }),
            ProtocolErrorKind::kNormalization);
  EXPECT_EQ(ThrownProtocolKind([&] { DecodeResponse(json::parse(ResponseLine("a", 1.5, -0.5)), labels); }),
            ProtocolErrorKind::kNormalization);
  EXPECT_EQ(ThrownProtocolKind([&] {
              DecodeResponse(json::parse(R"({"type":"response","id":"a","probs":{"true":0.5,"fake":0.5}})"),
                             labels);
            }),
            ProtocolErrorKind::kLabelSchema);
  EXPECT_EQ(ThrownProtocolKind([&] {
              DecodeResponse(json::parse(R"({"type":"response","id":"a","probs":{"real":"x","fake":0.5}})"),
                             labels);
            }),
            ProtocolErrorKind::kMalformedMessage);
}

TEST(CodecTest, ResponseWithSaliency) {
  PredictResponse response{"a", {0.4, 0.6}, std::vector<std::pair<std::string, double>>{{"w", 0.5}}};
  const PredictResponse decoded = DecodeResponse(json::parse(EncodeResponse(response).dump()), {"real", "fake"});
  ASSERT_TRUE(decoded.token_saliency.has_value());
  EXPECT_EQ(decoded.token_saliency->at(0).first, "w");
  EXPECT_EQ(decoded.token_saliency->at(0).second, 0.5);
}

TEST(SessionTest, HandshakeAccepted) {
  ScriptedServer server([](FdTransport& t) {
    t.WriteLine(kHelloLine);
    DrainUntilClosed(t);
  });
  ClientSession session(server.TakeClientEnd(), FastOptions());
  EXPECT_EQ(session.Handshake().model_name, "stub");
}

TEST(SessionTest, HandshakeVersionMismatch) {
  ScriptedServer server([](FdTransport& t) {
    t.WriteLine(R"({"type":"hello","protocol_version":2,"labels":["real","fake"],"model_name":"x"})");
    DrainUntilClosed(t);
  });
  ClientSession session(server.TakeClientEnd(), FastOptions());
  EXPECT_EQ(ThrownProtocolKind([&] { session.Handshake(); }), ProtocolErrorKind::kVersionMismatch);
}

TEST(SessionTest, HandshakeLabelSchema) {
  ScriptedServer server([](FdTransport& t) {
    t.WriteLine(R"({"type":"hello","protocol_version":1,"labels":["true","false"],"model_name":"x"})");
    DrainUntilClosed(t);
  });
  ClientSession session(server.TakeClientEnd(), FastOptions());
  EXPECT_EQ(ThrownProtocolKind([&] { session.Handshake(); }), ProtocolErrorKind::kLabelSchema);
}

TEST(SessionTest, HandshakeMalformed) {
  ScriptedServer server([](FdTransport& t) {
    t.WriteLine("{not json");
    DrainUntilClosed(t);
  });
  ClientSession session(server.TakeClientEnd(), FastOptions());
  EXPECT_EQ(ThrownProtocolKind([&] { session.Handshake(); }), ProtocolErrorKind::kMalformedMessage);
}

TEST(SessionTest, HandshakeTimeout) {
  ScriptedServer server([](FdTransport& t) { DrainUntilClosed(t); });
  SessionOptions options;
  options.timeout = 100ms;
  ClientSession session(server.TakeClientEnd(), options);
  EXPECT_EQ(ThrownProtocolKind([&] { session.Handshake(); }), ProtocolErrorKind::kTimeout);
}

TEST(SessionTest, OutOfOrderResponsesAreMatchedById) {
  ScriptedServer server([](FdTransport& t) {
    t.WriteLine(kHelloLine);
    const std::vector<std::string> ids = ReadRequests(t, 2);
    t.WriteLine(ResponseLine(ids.at(1), 0.1, 0.9));
    t.WriteLine(ResponseLine(ids.at(0), 0.8, 0.2));
    DrainUntilClosed(t);
  });
  ClientSession session(server.TakeClientEnd(), FastOptions());
  session.Handshake();
  const std::vector<PredictResult> results = session.Predict(Requests({"a", "b"}));
  ASSERT_EQ(results.size(), 2u);
  EXPECT_EQ(results[0].id, "a");
  ASSERT_TRUE(results[0].ok());
  EXPECT_EQ(results[0].response->probs.p_fake, 0.2);
  ASSERT_TRUE(results[1].ok());
  EXPECT_EQ(results[1].response->probs.p_fake, 0.9);
}

TEST(SessionTest, UnknownIdIsAViolation) {
  ScriptedServer server([](FdTransport& t) {
    t.WriteLine(kHelloLine);
    ReadRequests(t, 1);
    t.WriteLine(ResponseLine("zzz", 0.5, 0.5));
    DrainUntilClosed(t);
  });
  ClientSession session(server.TakeClientEnd(), FastOptions());
  session.Handshake();
  EXPECT_EQ(ThrownProtocolKind([&] { session.Predict(Requests({"a"})); }), ProtocolErrorKind::kUnknownId);
}

TEST(SessionTest, NormalizationViolationIsPerId) {
  ScriptedServer server([](FdTransport& t) {
    t.WriteLine(kHelloLine);
    const std::vector<std::string> ids = ReadRequests(t, 2);
    t.WriteLine(ResponseLine(ids.at(0), 0.7, 0.7));
    t.WriteLine(ResponseLine(ids.at(1), 0.5, 0.5));
    DrainUntilClosed(t);
  });
  ClientSession session(server.TakeClientEnd(), FastOptions());
  session.Handshake();
  const std::vector<PredictResult> results = session.Predict(Requests({"a", "b"}));
  EXPECT_FALSE(results[0].ok());
  EXPECT_EQ(results[0].error_kind, ProtocolErrorKind::kNormalization);
  EXPECT_TRUE(results[1].ok());
}

TEST(SessionTest, MalformedLineMidSession) {
  ScriptedServer server([](FdTransport& t) {
    t.WriteLine(kHelloLine);
    ReadRequests(t, 1);
    t.WriteLine("[1,2,3");
    DrainUntilClosed(t);
  });
  ClientSession session(server.TakeClientEnd(), FastOptions());
  session.Handshake();
  EXPECT_EQ(ThrownProtocolKind([&] { session.Predict(Requests({"a"})); }), ProtocolErrorKind::kMalformedMessage);
}

TEST(SessionTest, ServerErrorWithIdIsPerId) {
  ScriptedServer server([](FdTransport& t) {
    t.WriteLine(kHelloLine);
    const std::vector<std::string> ids = ReadRequests(t, 2);
    t.WriteLine(EncodeError(ids.at(0), "inference failed").dump());
    t.WriteLine(ResponseLine(ids.at(1), 0.5, 0.5));
    DrainUntilClosed(t);
  });
  ClientSession session(server.TakeClientEnd(), FastOptions());
  session.Handshake();
  const std::vector<PredictResult> results = session.Predict(Requests({"a", "b"}));
  EXPECT_EQ(results[0].error_kind, ProtocolErrorKind::kServerError);
  EXPECT_NE(results[0].error.find("inference failed"), std::string::npos);
  EXPECT_TRUE(results[1].ok());
}

TEST(SessionTest, ServerErrorWithoutIdThrows) {
  ScriptedServer server([](FdTransport& t) {
    t.WriteLine(kHelloLine);
    ReadRequests(t, 1);
    t.WriteLine(EncodeError(std::nullopt, "fatal").dump());
    DrainUntilClosed(t);
  });
  ClientSession session(server.TakeClientEnd(), FastOptions());
  session.Handshake();
  EXPECT_EQ(ThrownProtocolKind([&] { session.Predict(Requests({"a"})); }), ProtocolErrorKind::kServerError);
}

TEST(SessionTest, MissingResponseTimesOutPerId) {
  ScriptedServer server([](FdTransport& t) {
    t.WriteLine(kHelloLine);
    const std::vector<std::string> ids = ReadRequests(t, 2);
    t.WriteLine(ResponseLine(ids.at(0), 0.5, 0.5));
    DrainUntilClosed(t);
  });
  SessionOptions options;
  options.timeout = 200ms;
  ClientSession session(server.TakeClientEnd(), options);
  session.Handshake();
  const std::vector<PredictResult> results = session.Predict(Requests({"a", "b"}));
  EXPECT_TRUE(results[0].ok());
  EXPECT_EQ(results[1].error_kind, ProtocolErrorKind::kTimeout);
}

TEST(SessionTest, LateResponseForAbandonedIdIsDropped) {
  ScriptedServer server([](FdTransport& t) {
    t.WriteLine(kHelloLine);
    const std::vector<std::string> first = ReadRequests(t, 1);
    const std::vector<std::string> second = ReadRequests(t, 1);
    t.WriteLine(ResponseLine(first.at(0), 0.5, 0.5));
    t.WriteLine(ResponseLine(second.at(0), 0.4, 0.6));
    DrainUntilClosed(t);
  });
  SessionOptions options;
  options.timeout = 200ms;
  ClientSession session(server.TakeClientEnd(), options);
  session.Handshake();
  EXPECT_EQ(session.Predict(Requests({"a"}))[0].error_kind, ProtocolErrorKind::kTimeout);
  const std::vector<PredictResult> results = session.Predict(Requests({"b"}));
  ASSERT_TRUE(results[0].ok());
  EXPECT_EQ(results[0].response->probs.p_fake, 0.6);
}

TEST(SessionTest, EndOfStreamIsTransportError) {
  ScriptedServer server([](FdTransport& t) {
    t.WriteLine(kHelloLine);
    ReadRequests(t, 1);
  });
  ClientSession session(server.TakeClientEnd(), FastOptions());
  session.Handshake();
  EXPECT_EQ(ThrownProtocolKind([&] { session.Predict(Requests({"a"})); }), ProtocolErrorKind::kTransport);
}

TEST(SessionTest, DuplicateIdsRejected) {
  ScriptedServer server([](FdTransport& t) {
    t.WriteLine(kHelloLine);
    DrainUntilClosed(t);
  });
  ClientSession session(server.TakeClientEnd(), FastOptions());
  session.Handshake();
  EXPECT_EQ(ThrownCode([&] { session.Predict(Requests({"a", "a"})); }), ErrorCode::kInvalidArgument);
}

TEST(SessionTest, WindowBoundsInFlightRequests) {
  // The server answers each request only after checking that no more than
  // two are outstanding.
  std::atomic<size_t> max_in_flight{0};
  ScriptedServer server([&](FdTransport& t) {
    t.WriteLine(kHelloLine);
    for (int round = 0; round < 3; ++round) {
      const std::vector<std::string> ids = ReadRequests(t, 2);
      std::string extra;
      if (t.ReadLine(extra, 100ms) == ReadStatus::kLine) max_in_flight = 3;
      max_in_flight = std::max<size_t>(max_in_flight, ids.size());
      for (const std::string& id : ids) t.WriteLine(ResponseLine(id, 0.5, 0.5));
    }
    DrainUntilClosed(t);
  });
  SessionOptions options = FastOptions();
  options.window = 2;
  {
    ClientSession session(server.TakeClientEnd(), options);
    session.Handshake();
    const std::vector<PredictResult> results = session.Predict(Requests({"a", "b", "c", "d", "e", "f"}));
    for (const PredictResult& result : results) EXPECT_TRUE(result.ok()) << result.id << result.error;
  }
  EXPECT_EQ(max_in_flight.load(), 2u);
}

TEST(SessionTest, SaliencyStrippedWhenUnsupported) {
  ScriptedServer server([](FdTransport& t) {
    t.WriteLine(kHelloLine);
    const std::string line = ReadOrEmpty(t);
    const json request = json::parse(line);
    if (request.contains("want_saliency")) {
      t.WriteLine(EncodeError(request["id"].get<std::string>(), "unexpected saliency flag").dump());
    } else {
      t.WriteLine(ResponseLine(request["id"], 0.5, 0.5));
    }
    DrainUntilClosed(t);
  });
  ClientSession session(server.TakeClientEnd(), FastOptions());
  session.Handshake();
  const std::vector<PredictResult> results = session.Predict({{"a", "text", true}});
  ASSERT_TRUE(results[0].ok()) << results[0].error;
  EXPECT_FALSE(results[0].response->token_saliency.has_value());
}

TEST(ServeTest, BuiltinHandlerOverSocketPair) {
  auto [client_end, server_end] = MakeSocketPair();
  const Model model = FixtureModel();
  std::thread thread([&, server = std::move(server_end)] {
    BuiltinHandler handler(model, "fixture");
    Serve(*server, handler);
  });
  {
    ClientSession session(std::move(client_end), FastOptions());
    EXPECT_TRUE(session.Handshake().supports_saliency);
    EXPECT_EQ(session.hello().model_name, "fixture");
    const std::vector<PredictResult> results =
        session.Predict({{"a", "Donald Trump wins", true}, {"b", "plain words", false}});
    ASSERT_TRUE(results[0].ok());
    ASSERT_TRUE(results[0].response->token_saliency.has_value());
    const SaliencyMap map = GxiSaliency(model.params, model.vocab, "Donald Trump wins");
    ASSERT_EQ(results[0].response->token_saliency->size(), map.scores.size());
    for (size_t k = 0; k < map.scores.size(); ++k) {
      EXPECT_EQ(results[0].response->token_saliency->at(k).first, map.tokens[k]);
      EXPECT_NEAR(results[0].response->token_saliency->at(k).second, map.scores[k], 1e-12);
    }
    EXPECT_FALSE(results[1].response->token_saliency.has_value());
  }
  thread.join();
}

TEST(ServeTest, AnswersMalformedLinesWithErrors) {
  auto [client, server_end] = MakeSocketPair();
  std::thread thread([&, server = std::move(server_end)] {
    BuiltinHandler handler(FixtureModel(), "fixture");
    Serve(*server, handler);
  });
  std::string line;
  ASSERT_EQ(client->ReadLine(line, 5000ms), ReadStatus::kLine);
  EXPECT_EQ(json::parse(line)["type"], "hello");
  client->WriteLine("garbage");
  ASSERT_EQ(client->ReadLine(line, 5000ms), ReadStatus::kLine);
  EXPECT_EQ(json::parse(line)["type"], "error");
  client->WriteLine(R"({"type":"predict","id":"x"})");
  ASSERT_EQ(client->ReadLine(line, 5000ms), ReadStatus::kLine);
  EXPECT_EQ(json::parse(line)["type"], "error");
  client->WriteLine(EncodeShutdown().dump());
  thread.join();
  EXPECT_EQ(client->ReadLine(line, 5000ms), ReadStatus::kEof);
}

TEST(ClassifierSourceTest, Parses) {
  const ClassifierSource builtin = ParseClassifierSource("builtin:models/m.bin");
  EXPECT_EQ(builtin.kind, ClassifierSource::Kind::kBuiltin);
  EXPECT_EQ(builtin.target, "models/m.bin");
  const ClassifierSource command = ParseClassifierSource("cmd:python3 serve.py --port 1");
  EXPECT_EQ(command.kind, ClassifierSource::Kind::kCommand);
  EXPECT_EQ(command.target, "python3 serve.py --port 1");
  const ClassifierSource tcp = ParseClassifierSource("tcp:localhost:8080");
  EXPECT_EQ(tcp.kind, ClassifierSource::Kind::kTcp);
  EXPECT_EQ(tcp.target, "localhost");
  EXPECT_EQ(tcp.port, 8080);
  for (const char* bad : {"", "model.bin", "builtin:", "tcp:host", "tcp:host:99999", "tcp:host:x", "ftp:x"}) {
    EXPECT_EQ(ThrownCode([&] { ParseClassifierSource(bad); }), ErrorCode::kInvalidArgument) << bad;
  }
}

TEST(TransportTest, SubprocessMatchesInProcess) {
  const std::vector<PredictRequest> requests = FixtureRequests(40);
  BuiltinClient builtin(FixtureModel(), "fixture");
  const std::vector<PredictResult> expected = builtin.PredictBatch(requests);
  const std::string command = ShellQuote(testing::CliBinary().string()) + " serve --model " +
                              ShellQuote(TestDataPath("fixture_model.bin").string());
  std::unique_ptr<ClassifierClient> remote =
      OpenClassifier(ParseClassifierSource("cmd:" + command), FastOptions());
  EXPECT_EQ(remote->name(), "fixture_model.bin");
  const std::vector<PredictResult> actual = remote->PredictBatch(requests);
  ASSERT_EQ(actual.size(), expected.size());
  for (size_t i = 0; i < actual.size(); ++i) {
    ASSERT_TRUE(actual[i].ok()) << actual[i].error;
    EXPECT_NEAR(actual[i].response->probs.p_fake, expected[i].response->probs.p_fake, 1e-9);
  }
}

TEST(TransportTest, TcpMatchesInProcess) {
  const std::vector<PredictRequest> requests = FixtureRequests(40);
  BuiltinClient builtin(FixtureModel(), "fixture");
  const std::vector<PredictResult> expected = builtin.PredictBatch(requests);
  TcpListener listener(0);
  std::thread thread([&] {
    std::unique_ptr<FdTransport> connection = listener.Accept();
    BuiltinHandler handler(FixtureModel(), "fixture");
    Serve(*connection, handler);
  });
  {
    std::unique_ptr<ClassifierClient> remote = OpenClassifier(
        ParseClassifierSource("tcp:127.0.0.1:" + std::to_string(listener.port())), FastOptions());
    const std::vector<PredictResult> actual = remote->PredictBatch(requests);
    ASSERT_EQ(actual.size(), expected.size());
    for (size_t i = 0; i < actual.size(); ++i) {
      ASSERT_TRUE(actual[i].ok()) << actual[i].error;
      EXPECT_NEAR(actual[i].response->probs.p_fake, expected[i].response->probs.p_fake, 1e-9);
    }
  }
  thread.join();
}

TEST(TransportTest, ConnectFailureIsTransportError) {
  uint16_t port;
  {
    TcpListener listener(0);
    port = listener.port();
  }
  EXPECT_EQ(ThrownProtocolKind([&] { ConnectTcp("127.0.0.1", port, 500ms); }), ProtocolErrorKind::kTransport);
}

TEST(TransportTest, SubprocessThatExitsIsTransportError) {
  EXPECT_EQ(ThrownProtocolKind([] { OpenClassifier(ParseClassifierSource("cmd:true"), FastOptions()); }),
            ProtocolErrorKind::kTransport);
}

TEST(BuiltinClientTest, JobsDoNotChangeResults) {
  const std::vector<PredictRequest> requests = FixtureRequests(60);
  BuiltinClient serial(FixtureModel(), "fixture", 1);
  BuiltinClient parallel(FixtureModel(), "fixture", 4);
  const std::vector<PredictResult> a = serial.PredictBatch(requests);
  const std::vector<PredictResult> b = parallel.PredictBatch(requests);
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].id, b[i].id);
    EXPECT_EQ(a[i].response->probs.p_fake, b[i].response->probs.p_fake);
  }
}

TEST(TranscriptTest, SelfConsistency) {
  BuiltinClient builtin(FixtureModel(), "fixture");
  const ConformanceReport report =
      VerifyTranscript(ReadFileToString(TestDataPath("golden_transcript.jsonl")), builtin);
  EXPECT_EQ(report.lines.size(), 50u);
  EXPECT_TRUE(report.ok());
  const std::string regenerated = MakeTranscript(FixtureModel(), FixtureRequests(50), 1e-9);
  EXPECT_EQ(regenerated, ReadFileToString(TestDataPath("golden_transcript.jsonl")));
}

TEST(TranscriptTest, WrongExpectationFailsThatLine) {
  std::vector<std::string> lines = testing::SplitLines(MakeTranscript(FixtureModel(), FixtureRequests(3), 1e-9));
  ASSERT_EQ(lines.size(), 3u);
  json second = json::parse(lines[1]);
  second["expected_probs"]["fake"] = 1.0 - second["expected_probs"]["fake"].get<double>();
  second["expected_probs"]["real"] = 1.0 - second["expected_probs"]["real"].get<double>();
  lines[1] = second.dump();
  BuiltinClient builtin(FixtureModel(), "fixture");
  const ConformanceReport report = VerifyTranscript(lines[0] + "\n" + lines[1] + "\n" + lines[2] + "\n", builtin);
  ASSERT_EQ(report.lines.size(), 3u);
  EXPECT_TRUE(report.lines[0].pass);
  EXPECT_FALSE(report.lines[1].pass);
  EXPECT_EQ(report.lines[1].line, 2u);
  EXPECT_TRUE(report.lines[2].pass);
  EXPECT_EQ(report.failed(), 1u);
}

TEST(TranscriptTest, BadLineFailsAndRunContinues) {
  const std::string good = MakeTranscript(FixtureModel(), FixtureRequests(1), 1e-9);
  BuiltinClient builtin(FixtureModel(), "fixture");
  const ConformanceReport report = VerifyTranscript("{broken\n" + good, builtin);
  ASSERT_EQ(report.lines.size(), 2u);
  EXPECT_FALSE(report.lines[0].pass);
  EXPECT_TRUE(report.lines[1].pass);
}

TEST(TranscriptTest, EmptyTranscriptSucceeds) {
  BuiltinClient builtin(FixtureModel(), "fixture");
  const ConformanceReport report = VerifyTranscript("", builtin);
  EXPECT_TRUE(report.lines.empty());
  EXPECT_TRUE(report.ok());
}

}  // namespace
}  // namespace newsbreaker
