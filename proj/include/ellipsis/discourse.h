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

// Annotated discourse files.
//
//   utterance <n>
//   phrase <id> "<surface>" class=<WordClass> [head=<id>] [det=definite]
//          [bind=<KB-NAME>] func=<category>
//   link <FROM> <role>[,<role>...] <TO>
//
// A phrase line is a single line. <category> is one of anaphor:<kind>:<func>,
// head-rheme, right-edge-rheme, head-theme or unmarked. A link line records a
// part-of attachment that semantic interpretation of the enclosing utterance
// already established. '#' outside a quoted surface starts a comment.

#ifndef ELLIPSIS_DISCOURSE_H_
#define ELLIPSIS_DISCOURSE_H_

#include <string>
#include <string_view>
#include <vector>

#include "ellipsis/centering.h"
#include "ellipsis/kb.h"
#include "ellipsis/resolver.h"

namespace ellipsis {

struct SentenceLink {
  int utterance = 0;
  BridgeLink link;

  bool operator==(const SentenceLink &other) const = default;
};

struct DiscourseDocument {
  // Indices run 1, 2, 3, ...
  std::vector<Utterance> utterances;
  std::vector<SentenceLink> links;

  bool operator==(const DiscourseDocument &other) const = default;
};

// Syntax and structure only: contiguous indices, unique phrase ids, head
// references inside the utterance forming a forest.
DiscourseDocument ParseDiscourse(std::string_view source);

// Every binding and link endpoint must name a KB instance or concept and
// every link role must be declared.
void ValidateDiscourse(const DiscourseDocument &doc, const Kb &kb);

DiscourseDocument LoadDiscourse(std::string_view source, const Kb &kb);

std::string SerializeDiscourse(const DiscourseDocument &doc);

}  // namespace ellipsis

#endif  // ELLIPSIS_DISCOURSE_H_
