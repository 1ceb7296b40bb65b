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

#include "newsbreaker/error.h"

namespace newsbreaker {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid_argument";
    case ErrorCode::kParse:
      return "parse";
    case ErrorCode::kStructural:
      return "structural";
    case ErrorCode::kIo:
      return "io";
    case ErrorCode::kModelFormat:
      return "model_format";
    case ErrorCode::kNumeric:
      return "numeric";
    case ErrorCode::kProtocol:
      return "protocol";
    case ErrorCode::kUndefinedMetric:
      return "undefined_metric";
  }
  return "unknown";
}

const char* ProtocolErrorKindName(ProtocolErrorKind kind) {
  switch (kind) {
    case ProtocolErrorKind::kTimeout:
      return "timeout";
    case ProtocolErrorKind::kMalformedMessage:
      return "malformed_message";
    case ProtocolErrorKind::kVersionMismatch:
      return "version_mismatch";
    case ProtocolErrorKind::kLabelSchema:
      return "label_schema";
    case ProtocolErrorKind::kUnknownId:
      return "unknown_id";
    case ProtocolErrorKind::kNormalization:
      return "normalization";
    case ProtocolErrorKind::kServerError:
      return "server_error";
    case ProtocolErrorKind::kTransport:
      return "transport";
  }
  return "unknown";
}

}  // namespace newsbreaker
