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

#include "ellipsis/proximity.h"

#include <unordered_set>

#include "ellipsis/error.h"

namespace ellipsis {

namespace {

// Depth-limited search for a chain of exactly `limit` hops. Concepts a chain
// leaves from are pairwise distinct; the final range may repeat one of them
// (a shortest chain never needs more).
class ChainSearch {
 public:
  ChainSearch(const Kb &kb, const std::string &origin,
              const std::string &target)
      : kb_(kb),
        origin_(origin),
        target_(target),
        partition_(kb.PartitionOf(origin)) {}

  bool Find(int limit, std::vector<RoleHop> *steps) {
    steps->clear();
    on_path_.clear();
    return Extend(origin_, limit, steps);
  }

 private:
  bool Extend(const std::string &at, int remaining,
              std::vector<RoleHop> *steps) {
    on_path_.insert(at);
    for (const RoleHop &hop : kb_.OutgoingRoles(at)) {
      if (!kb_.IsPartOfRole(hop.role)) continue;
      if (kb_.PartitionOf(hop.range) != partition_) continue;
      steps->push_back(hop);
      if (remaining == 1) {
        if (kb_.Subsumes(hop.range, target_)) return true;
      } else if (on_path_.count(hop.range) == 0 &&
                 Extend(hop.range, remaining - 1, steps)) {
        return true;
      }
      steps->pop_back();
    }
    on_path_.erase(at);
    return false;
  }

  const Kb &kb_;
  const std::string &origin_;
  const std::string &target_;
  const std::string &partition_;
  std::unordered_set<std::string> on_path_;
};

void CheckDepth(int max_depth) {
  if (max_depth < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "max depth must be at least 1, got " +
                    std::to_string(max_depth));
  }
}

}  // namespace

ProximityResult ProximityScore(const Kb &kb, std::string_view from,
                               std::string_view to, int max_depth) {
  CheckDepth(max_depth);
  const std::string &origin = kb.ResolveConcept(from);
  const std::string &target = kb.ResolveConcept(to);

  ProximityResult result;
  ChainSearch search(kb, origin, target);
  std::vector<RoleHop> steps;
  for (int depth = 1; depth <= max_depth; ++depth) {
    bool hit = search.Find(depth, &steps);
    result.trace.push_back({std::string(from), depth, hit});
    if (hit) {
      result.score = depth;
      result.chain = RoleChain{std::string(from), steps};
      break;
    }
  }
  return result;
}

BridgeProbeResult BridgeProbe(const Kb &kb,
                              std::span<const std::string> candidates,
                              std::string_view target, int max_depth) {
  CheckDepth(max_depth);
  std::vector<ProximityResult> scores;
  scores.reserve(candidates.size());
  for (const auto &candidate : candidates) {
    scores.push_back(ProximityScore(kb, candidate, target, max_depth));
  }

  BridgeProbeResult result;
  for (int depth = 1; depth <= max_depth && !result.depth; ++depth) {
    for (size_t i = 0; i < candidates.size(); ++i) {
      bool hit = scores[i].score == depth;
      if (!result.depth) result.trace.push_back({candidates[i], depth, hit});
      if (hit) {
        result.depth = depth;
        result.winners.push_back(candidates[i]);
        result.winner_indices.push_back(i);
        result.chains.push_back(*scores[i].chain);
      }
    }
  }
  return result;
}

}  // namespace ellipsis
