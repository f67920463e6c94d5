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

#ifndef ELLIPSIS_ERROR_H_
#define ELLIPSIS_ERROR_H_

#include <stdexcept>
#include <string>

namespace ellipsis {

enum class ErrorCode {
  kParse,
  kIsaCycle,
  kRoleCycle,
  kDanglingReference,
  kDuplicateDeclaration,
  kPartitionConflict,
  kUnknownName,
  kUnbound,
  kDuplicateAssertion,
  kUnknownActor,
  kProtocol,
  kAnnotation,
  kInvalidArgument,
};

const char *ErrorCodeName(ErrorCode code);

// All library failures are reported by throwing Error. Input errors carry the
// 1-based line number of the offending declaration when one is known (0
// otherwise).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message, int line = 0);

  ErrorCode code() const { return code_; }
  int line() const { return line_; }

 private:
  ErrorCode code_;
  int line_;
};

}  // namespace ellipsis

#endif  // ELLIPSIS_ERROR_H_
