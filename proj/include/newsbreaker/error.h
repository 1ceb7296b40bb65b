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

#ifndef NEWSBREAKER_ERROR_H_
#define NEWSBREAKER_ERROR_H_

#include <stdexcept>
#include <string>

namespace newsbreaker {

enum class ErrorCode {
  kInvalidArgument,  // caller broke a documented precondition
  kParse,            // malformed input file or record
  kStructural,       // inconsistent spans, shapes or edit lists
  kIo,
  kModelFormat,      // bad magic, truncated or wrong-version model file
  kNumeric,          // non-finite values during training
  kProtocol,
  kUndefinedMetric,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

enum class ProtocolErrorKind {
  kTimeout,
  kMalformedMessage,
  kVersionMismatch,
  kLabelSchema,
  kUnknownId,       // response for an id that was never requested
  kNormalization,   // probabilities do not sum to one
  kServerError,     // server answered with an error message
  kTransport,       // connection closed or failed
};

const char* ProtocolErrorKindName(ProtocolErrorKind kind);

class ProtocolError : public Error {
 public:
  ProtocolError(ProtocolErrorKind kind, const std::string& message)
      : Error(ErrorCode::kProtocol, message), kind_(kind) {}

  ProtocolErrorKind kind() const { return kind_; }

 private:
  ProtocolErrorKind kind_;
};

}  // namespace newsbreaker

#endif  // NEWSBREAKER_ERROR_H_
