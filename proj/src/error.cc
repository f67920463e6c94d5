// Copyright 2026 The Ellipsis Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ellipsis/error.h"

namespace ellipsis {

const char *ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kIsaCycle: return "isa cycle";
    case ErrorCode::kRoleCycle: return "role cycle";
    case ErrorCode::kDanglingReference: return "dangling reference";
    case ErrorCode::kDuplicateDeclaration: return "duplicate declaration";
    case ErrorCode::kPartitionConflict: return "partition conflict";
    case ErrorCode::kUnknownName: return "unknown name";
    case ErrorCode::kUnbound: return "unbound phrase";
    case ErrorCode::kDuplicateAssertion: return "duplicate assertion";
    case ErrorCode::kUnknownActor: return "unknown actor";
    case ErrorCode::kProtocol: return "protocol error";
    case ErrorCode::kAnnotation: return "annotation error";
    case ErrorCode::kInvalidArgument: return "invalid argument";
  }
  return "error";
}

static std::string Decorate(ErrorCode code, const std::string &message,
                            int line) {
  std::string text = ErrorCodeName(code);
  if (line > 0) text += " at line " + std::to_string(line);
  text += ": ";
  text += message;
  return text;
}

Error::Error(ErrorCode code, const std::string &message, int line)
    : std::runtime_error(Decorate(code, message, line)),
      code_(code),
      line_(line) {}

}  // namespace ellipsis
