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

#include "ellipsis/resolver.h"

#include <algorithm>

#include "ellipsis/error.h"

namespace ellipsis {

const std::string &BindingOf(const Phrase &phrase) {
  if (!phrase.binding) {
    throw Error(ErrorCode::kUnbound,
                "phrase '" + phrase.id + "' in utterance " +
                    std::to_string(phrase.utterance) + " has no binding");
  }
  return *phrase.binding;
}

bool NominalAnaphoraGate(const Kb &kb, const Phrase &target,
                         const CenterState &prior_cf) {
  const std::string &concept_name = kb.ResolveConcept(BindingOf(target));
  for (const auto &x : prior_cf.cf) {
    if (!x.binding) continue;
    if (kb.Subsumes(concept_name, kb.ResolveConcept(*x.binding))) return true;
  }
  return false;
}

bool IsPotentialEllipticAntecedent(const Phrase &x, const Phrase &y, int n,
                                   const CenterState &cf_prev) {
  return IsaClass(x.word_class, WordClass::kNoun) &&
         IsaClass(y.word_class, WordClass::kNoun) && y.has_definite_det &&
         y.utterance == n && cf_prev.utterance == n - 1 &&
         cf_prev.Contains(x);
}

BridgeEpisode EvaluateBridge(const Kb &kb, const Phrase &y,
                             const CenterState &cf_prev, int max_depth) {
  BridgeEpisode episode;
  episode.target = y;
  const std::string &target = BindingOf(y);

  std::vector<std::string> names;
  for (const auto &x : cf_prev.cf) {
    if (!x.binding) continue;
    if (!IsPotentialEllipticAntecedent(x, y, y.utterance, cf_prev)) continue;
    episode.candidates.push_back(x);
    names.push_back(*x.binding);
  }

  BridgeProbeResult probe = BridgeProbe(kb, names, target, max_depth);
  episode.trace = probe.trace;
  if (!probe.depth) return episode;

  const std::vector<size_t> &tied = probe.winner_indices;
  auto beaten = [&](size_t x) {
    return std::any_of(tied.begin(), tied.end(), [&](size_t z) {
      return CompareTc(episode.candidates[z].category,
                       episode.candidates[x].category) == Preference::kAFirst;
    });
  };
  size_t winner = *std::find_if_not(tied.begin(), tied.end(), beaten);
  size_t winner_slot = std::find(tied.begin(), tied.end(), winner) -
                       tied.begin();

  Resolution resolution;
  resolution.target = y;
  resolution.antecedent = episode.candidates[winner];
  resolution.chain = probe.chains[winner_slot];
  resolution.trace = episode.trace;
  resolution.tie_broken_by_tc =
      std::any_of(tied.begin(), tied.end(), [&](size_t z) {
        return CompareTc(episode.candidates[winner].category,
                         episode.candidates[z].category) ==
               Preference::kAFirst;
      });
  episode.resolution = std::move(resolution);
  return episode;
}

std::optional<Resolution> PreferredConceptualBridge(
    const Kb &kb, const Phrase &y, const CenterState &cf_prev,
    int max_depth) {
  return EvaluateBridge(kb, y, cf_prev, max_depth).resolution;
}

void AssertionStore::Assert(BridgeLink link) {
  if (FindByTarget(link.to) != nullptr) {
    throw Error(ErrorCode::kDuplicateAssertion,
                "a link into '" + link.to + "' is already asserted");
  }
  links_.push_back(std::move(link));
}

const BridgeLink *AssertionStore::FindByTarget(std::string_view target) const {
  for (const auto &link : links_) {
    if (link.to == target) return &link;
  }
  return nullptr;
}

bool AssertionStore::PartOfConnected(const Kb &kb, std::string_view a,
                                     std::string_view b) const {
  for (const auto &link : links_) {
    bool joins = (link.from == a && link.to == b) ||
                 (link.from == b && link.to == a);
    if (!joins || link.roles.empty()) continue;
    bool part_of = std::all_of(
        link.roles.begin(), link.roles.end(), [&](const std::string &role) {
          return kb.HasRole(role) && kb.IsPartOfRole(role);
        });
    if (part_of) return true;
  }
  return false;
}

void AssertBridge(AssertionStore &store, const Resolution &resolution) {
  BridgeLink link;
  link.from = BindingOf(resolution.antecedent);
  link.to = BindingOf(resolution.target);
  for (const auto &step : resolution.chain.steps) link.roles.push_back(step.role);
  store.Assert(std::move(link));
}

bool IsPartonomicallyAttached(const Kb &kb, const Phrase &y,
                              const Utterance &current,
                              const AssertionStore &store) {
  const std::string &referent = BindingOf(y);
  for (const auto &other : current.phrases) {
    if (other.id == y.id || !other.binding) continue;
    if (store.PartOfConnected(kb, referent, *other.binding)) return true;
  }
  return false;
}

bool TriggerCheck(const Kb &kb, const Phrase &y, const Utterance &current,
                  const CenterState &prior_cf, const AssertionStore &store) {
  return !NominalAnaphoraGate(kb, y, prior_cf) &&
         !IsPartonomicallyAttached(kb, y, current, store);
}

}  // namespace ellipsis
