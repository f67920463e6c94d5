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

// Annotated discourse units and the centering data computed from them.
//
// Forward-looking centers are ranked by a three-layer topic/comment order:
//
//   anaphora > head rheme > right edge rheme > head theme > unmarked head
//   pronominal > possessive pronoun > nominal anaphor > textual ellipsis
//   subject > direct object > indirect object > adjunct
//
// Two anaphors of the same kind compare by grammatical function, two
// anaphors of different kinds compare by anaphor kind, and everything else
// compares by the top layer.

#ifndef ELLIPSIS_CENTERING_H_
#define ELLIPSIS_CENTERING_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ellipsis {

// Word-class hierarchy:
//   Word > Nominal > {Noun > ProperNoun, Pronoun, DetDefinite, DetIndefinite}
//   Word > {Verb, Preposition, Adjective}
enum class WordClass {
  kWord,
  kNominal,
  kNoun,
  kProperNoun,
  kPronoun,
  kDetDefinite,
  kDetIndefinite,
  kVerb,
  kPreposition,
  kAdjective,
};

std::optional<WordClass> ParentClass(WordClass word_class);

// Reflexive-transitive subclass test.
bool IsaClass(WordClass word_class, WordClass ancestor);

std::string_view WordClassName(WordClass word_class);
std::optional<WordClass> ParseWordClass(std::string_view name);

// Top layer, most preferred first.
enum class TcKind {
  kAnaphor,
  kHeadRheme,
  kRightEdgeRheme,
  kHeadTheme,
  kUnmarkedHead,
};

enum class AnaphorKind {
  kPronominal,
  kPossessivePronoun,
  kNominalAnaphor,
  kTextualEllipsis,
};

enum class GrammaticalFunction {
  kSubject,
  kDirectObject,
  kIndirectObject,
  kAdjunct,
};

// Anaphor kind and grammatical function are present iff kind is kAnaphor.
class FunctionalCategory {
 public:
  // An unmarked head.
  FunctionalCategory() = default;
  // A non-anaphoric category; throws for kAnaphor.
  explicit FunctionalCategory(TcKind kind);
  FunctionalCategory(AnaphorKind anaphor_kind, GrammaticalFunction function);

  TcKind kind() const { return kind_; }
  bool is_anaphor() const { return kind_ == TcKind::kAnaphor; }
  const std::optional<AnaphorKind> &anaphor_kind() const {
    return anaphor_kind_;
  }
  const std::optional<GrammaticalFunction> &function() const {
    return function_;
  }

  bool operator==(const FunctionalCategory &other) const = default;

 private:
  TcKind kind_ = TcKind::kUnmarkedHead;
  std::optional<AnaphorKind> anaphor_kind_;
  std::optional<GrammaticalFunction> function_;
};

// Text forms: anaphor:<kind>:<function>, head-rheme, right-edge-rheme,
// head-theme, unmarked.
std::string FormatCategory(const FunctionalCategory &category);
std::optional<FunctionalCategory> ParseCategory(std::string_view text);

std::vector<FunctionalCategory> AllCategories();

enum class Preference { kAFirst, kBFirst, kEqual };

Preference CompareTc(const FunctionalCategory &a, const FunctionalCategory &b);

struct Phrase {
  // Unique within its utterance.
  std::string id;
  std::string surface;
  WordClass word_class = WordClass::kWord;
  // Id of the governing phrase in the same utterance, if any.
  std::optional<std::string> head;
  bool has_definite_det = false;
  // KB instance or concept denoted by the phrase.
  std::optional<std::string> binding;
  FunctionalCategory category;
  int utterance = 0;
  int position = 0;

  bool operator==(const Phrase &other) const = default;
};

struct Utterance {
  int index = 0;
  std::vector<Phrase> phrases;

  const Phrase *Find(std::string_view id) const;

  bool operator==(const Utterance &other) const = default;
};

struct CenterState {
  int utterance = 0;
  // Most preferred first.
  std::vector<Phrase> cf;
  std::optional<Phrase> cb;

  bool Contains(const Phrase &phrase) const;
};

// Nouns and pronouns that head their phrase, plus nominal modifiers marked
// as right edge of the rheme.
bool IsCfEligible(const Phrase &phrase, const Utterance &utterance);

// Stable topic/comment sort of the eligible phrases; cb is the highest
// ranked anaphor.
CenterState RankCf(const Utterance &utterance);

}  // namespace ellipsis

#endif  // ELLIPSIS_CENTERING_H_
