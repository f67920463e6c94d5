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

// Text ellipsis predicates.
//
// A definite noun y in utterance n may be bridged to a noun x among the
// forward-looking centers of utterance n - 1. Among such candidates the one
// with the shortest part-of role chain to y wins; equal chain lengths are
// decided by the topic/comment order, and what is still tied goes to the
// earlier forward-looking center.

#ifndef ELLIPSIS_RESOLVER_H_
#define ELLIPSIS_RESOLVER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ellipsis/centering.h"
#include "ellipsis/kb.h"
#include "ellipsis/proximity.h"

namespace ellipsis {

// The nominal-anaphora test is only a subsumption check; reports say so.
inline constexpr std::string_view kGateLabel = "gate: subsumption-stub";

struct Resolution {
  Phrase target;
  Phrase antecedent;
  RoleChain chain;
  std::vector<Probe> trace;
  bool tie_broken_by_tc = false;

  bool operator==(const Resolution &other) const = default;
};

// One evaluation of the preferred-bridge predicate, successful or not.
struct BridgeEpisode {
  Phrase target;
  // Potential antecedents in forward-looking-center order.
  std::vector<Phrase> candidates;
  std::vector<Probe> trace;
  std::optional<Resolution> resolution;
};

// Returns the phrase's binding or throws kUnbound.
const std::string &BindingOf(const Phrase &phrase);

// True when the target is a nominal anaphor, i.e. its concept subsumes the
// concept of some bound forward-looking center. Such targets are not
// elliptical.
bool NominalAnaphoraGate(const Kb &kb, const Phrase &target,
                         const CenterState &prior_cf);

bool IsPotentialEllipticAntecedent(const Phrase &x, const Phrase &y, int n,
                                   const CenterState &cf_prev);

BridgeEpisode EvaluateBridge(const Kb &kb, const Phrase &y,
                             const CenterState &cf_prev,
                             int max_depth = kDefaultMaxDepth);

std::optional<Resolution> PreferredConceptualBridge(
    const Kb &kb, const Phrase &y, const CenterState &cf_prev,
    int max_depth = kDefaultMaxDepth);

// Instance-level relation asserted into the discourse model.
struct BridgeLink {
  std::string from;
  std::vector<std::string> roles;
  std::string to;

  bool operator==(const BridgeLink &other) const = default;
};

// Discourse-level overlay on an immutable Kb. Holds the part-of links found
// by semantic interpretation and by ellipsis resolution.
class AssertionStore {
 public:
  // Throws kDuplicateAssertion if a link into the same target exists.
  void Assert(BridgeLink link);

  const std::vector<BridgeLink> &links() const { return links_; }
  const BridgeLink *FindByTarget(std::string_view target) const;

  // True iff a link made only of part-of-type roles joins a and b in either
  // direction.
  bool PartOfConnected(const Kb &kb, std::string_view a,
                       std::string_view b) const;

 private:
  std::vector<BridgeLink> links_;
};

// Records (antecedent, chain roles, target) for a resolution.
void AssertBridge(AssertionStore &store, const Resolution &resolution);

// True iff y's referent is already joined by a part-of link to the referent
// of another phrase of the current utterance.
bool IsPartonomicallyAttached(const Kb &kb, const Phrase &y,
                              const Utterance &current,
                              const AssertionStore &store);

// Ellipsis resolution starts only for non-anaphoric phrases that semantic
// interpretation left without a partonomic attachment.
bool TriggerCheck(const Kb &kb, const Phrase &y, const Utterance &current,
                  const CenterState &prior_cf, const AssertionStore &store);

}  // namespace ellipsis

#endif  // ELLIPSIS_RESOLVER_H_
