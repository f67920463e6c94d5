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

#include "ellipsis/centering.h"

#include <algorithm>
#include <array>
#include <utility>

#include "ellipsis/error.h"

namespace ellipsis {

namespace {

constexpr std::array<std::pair<WordClass, std::string_view>, 10> kClassNames{{
    {WordClass::kWord, "Word"},
    {WordClass::kNominal, "Nominal"},
    {WordClass::kNoun, "Noun"},
    {WordClass::kProperNoun, "ProperNoun"},
    {WordClass::kPronoun, "Pronoun"},
    {WordClass::kDetDefinite, "DetDefinite"},
    {WordClass::kDetIndefinite, "DetIndefinite"},
    {WordClass::kVerb, "Verb"},
    {WordClass::kPreposition, "Preposition"},
    {WordClass::kAdjective, "Adjective"},
}};

constexpr std::array<std::pair<TcKind, std::string_view>, 4> kBaseNames{{
    {TcKind::kHeadRheme, "head-rheme"},
    {TcKind::kRightEdgeRheme, "right-edge-rheme"},
    {TcKind::kHeadTheme, "head-theme"},
    {TcKind::kUnmarkedHead, "unmarked"},
}};

constexpr std::array<std::pair<AnaphorKind, std::string_view>, 4>
    kAnaphorNames{{
        {AnaphorKind::kPronominal, "pronominal"},
        {AnaphorKind::kPossessivePronoun, "possessive"},
        {AnaphorKind::kNominalAnaphor, "nominal"},
        {AnaphorKind::kTextualEllipsis, "ellipsis"},
    }};

constexpr std::array<std::pair<GrammaticalFunction, std::string_view>, 4>
    kFunctionNames{{
        {GrammaticalFunction::kSubject, "subject"},
        {GrammaticalFunction::kDirectObject, "direct-object"},
        {GrammaticalFunction::kIndirectObject, "indirect-object"},
        {GrammaticalFunction::kAdjunct, "adjunct"},
    }};

template <typename Enum, size_t N>
std::string_view NameOf(const std::array<std::pair<Enum, std::string_view>, N>
                            &table,
                        Enum value) {
  for (const auto &[e, name] : table) {
    if (e == value) return name;
  }
  return "?";
}

template <typename Enum, size_t N>
std::optional<Enum> ValueOf(
    const std::array<std::pair<Enum, std::string_view>, N> &table,
    std::string_view name) {
  for (const auto &[e, n] : table) {
    if (n == name) return e;
  }
  return std::nullopt;
}

// Enumerators are declared most preferred first.
template <typename Enum>
Preference CompareRank(Enum a, Enum b) {
  if (a == b) return Preference::kEqual;
  return static_cast<int>(a) < static_cast<int>(b) ? Preference::kAFirst
                                                   : Preference::kBFirst;
}

}  // namespace

std::optional<WordClass> ParentClass(WordClass word_class) {
  switch (word_class) {
    case WordClass::kWord:
      return std::nullopt;
    case WordClass::kNominal:
    case WordClass::kVerb:
    case WordClass::kPreposition:
    case WordClass::kAdjective:
      return WordClass::kWord;
    case WordClass::kNoun:
    case WordClass::kPronoun:
    case WordClass::kDetDefinite:
    case WordClass::kDetIndefinite:
      return WordClass::kNominal;
    case WordClass::kProperNoun:
      return WordClass::kNoun;
  }
  return std::nullopt;
}

bool IsaClass(WordClass word_class, WordClass ancestor) {
  for (std::optional<WordClass> c = word_class; c; c = ParentClass(*c)) {
    if (*c == ancestor) return true;
  }
  return false;
}

std::string_view WordClassName(WordClass word_class) {
  return NameOf(kClassNames, word_class);
}

std::optional<WordClass> ParseWordClass(std::string_view name) {
  return ValueOf(kClassNames, name);
}

FunctionalCategory::FunctionalCategory(TcKind kind) : kind_(kind) {
  if (kind == TcKind::kAnaphor) {
    throw Error(ErrorCode::kInvalidArgument,
                "an anaphor category needs a kind and a function");
  }
}

FunctionalCategory::FunctionalCategory(AnaphorKind anaphor_kind,
                                       GrammaticalFunction function)
    : kind_(TcKind::kAnaphor),
      anaphor_kind_(anaphor_kind),
      function_(function) {}

std::string FormatCategory(const FunctionalCategory &category) {
  if (!category.is_anaphor()) {
    return std::string(NameOf(kBaseNames, category.kind()));
  }
  return "anaphor:" +
         std::string(NameOf(kAnaphorNames, *category.anaphor_kind())) + ":" +
         std::string(NameOf(kFunctionNames, *category.function()));
}

std::optional<FunctionalCategory> ParseCategory(std::string_view text) {
  constexpr std::string_view kPrefix = "anaphor:";
  if (text.substr(0, kPrefix.size()) != kPrefix) {
    auto kind = ValueOf(kBaseNames, text);
    if (!kind) return std::nullopt;
    return FunctionalCategory(*kind);
  }
  text.remove_prefix(kPrefix.size());
  size_t colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  auto anaphor = ValueOf(kAnaphorNames, text.substr(0, colon));
  auto function = ValueOf(kFunctionNames, text.substr(colon + 1));
  if (!anaphor || !function) return std::nullopt;
  return FunctionalCategory(*anaphor, *function);
}

std::vector<FunctionalCategory> AllCategories() {
  std::vector<FunctionalCategory> all;
  for (const auto &[kind, name] : kAnaphorNames) {
    for (const auto &[function, fname] : kFunctionNames) {
      all.emplace_back(kind, function);
    }
  }
  for (const auto &[kind, name] : kBaseNames) all.emplace_back(kind);
  return all;
}

Preference CompareTc(const FunctionalCategory &a,
                     const FunctionalCategory &b) {
  if (a.is_anaphor() && b.is_anaphor()) {
    if (*a.anaphor_kind() == *b.anaphor_kind()) {
      return CompareRank(*a.function(), *b.function());
    }
    return CompareRank(*a.anaphor_kind(), *b.anaphor_kind());
  }
  return CompareRank(a.kind(), b.kind());
}

const Phrase *Utterance::Find(std::string_view id) const {
  for (const auto &phrase : phrases) {
    if (phrase.id == id) return &phrase;
  }
  return nullptr;
}

bool CenterState::Contains(const Phrase &phrase) const {
  return std::any_of(cf.begin(), cf.end(), [&](const Phrase &p) {
    return p.utterance == phrase.utterance && p.id == phrase.id;
  });
}

bool IsCfEligible(const Phrase &phrase, const Utterance &utterance) {
  if (!IsaClass(phrase.word_class, WordClass::kNoun) &&
      !IsaClass(phrase.word_class, WordClass::kPronoun)) {
    return false;
  }
  if (phrase.category.kind() == TcKind::kRightEdgeRheme) return true;
  if (!phrase.head) return true;
  // A nominal governed by another nominal is a modifier, not a head.
  const Phrase *governor = utterance.Find(*phrase.head);
  return governor == nullptr ||
         !IsaClass(governor->word_class, WordClass::kNominal);
}

CenterState RankCf(const Utterance &utterance) {
  CenterState state;
  state.utterance = utterance.index;
  for (const auto &phrase : utterance.phrases) {
    if (IsCfEligible(phrase, utterance)) state.cf.push_back(phrase);
  }
  std::stable_sort(state.cf.begin(), state.cf.end(),
                   [](const Phrase &a, const Phrase &b) {
                     return CompareTc(a.category, b.category) ==
                            Preference::kAFirst;
                   });
  for (const auto &phrase : state.cf) {
    if (phrase.category.is_anaphor()) {
      state.cb = phrase;
      break;
    }
  }
  return state;
}

}  // namespace ellipsis
