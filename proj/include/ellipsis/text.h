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

// Small string helpers shared by the line-oriented file readers.

#ifndef ELLIPSIS_TEXT_H_
#define ELLIPSIS_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace ellipsis {

// Splits on '\n'; a trailing '\r' is dropped from each line.
std::vector<std::string_view> SplitLines(std::string_view text);

// Everything before the first '#'.
std::string_view StripComment(std::string_view line);

// Whitespace-separated tokens.
std::vector<std::string> Tokenize(std::string_view line);

std::string ToUpper(std::string_view text);

// Reads a whole file; throws Error(kParse) if it cannot be opened.
std::string ReadFile(const std::string &path);

}  // namespace ellipsis

#endif  // ELLIPSIS_TEXT_H_
