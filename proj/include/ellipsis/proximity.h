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

// Conceptual proximity: the number of part-of-type roles on the shortest role
// chain leading from an antecedent's concept to a concept subsuming the
// elliptical expression's concept.
//
// Chains are directed (whole to part), may only use roles below has-part, and
// must stay inside the origin's partition. Generalization links are never
// traversed. Identity is not a bridge: every chain has at least one hop.

#ifndef ELLIPSIS_PROXIMITY_H_
#define ELLIPSIS_PROXIMITY_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ellipsis/kb.h"

namespace ellipsis {

// Longest chain ever needed in practice; the default search bound.
inline constexpr int kDefaultMaxDepth = 5;

// An ordered role composition. steps[i].range carries steps[i + 1].role
// either directly or by inheritance.
struct RoleChain {
  std::string origin;
  std::vector<RoleHop> steps;

  int depth() const { return static_cast<int>(steps.size()); }

  bool operator==(const RoleChain &other) const = default;
};

// One row of an iterative-deepening sweep.
struct Probe {
  std::string candidate;
  int depth = 0;
  bool hit = false;

  bool operator==(const Probe &other) const = default;
};

struct ProximityResult {
  // Absent means infinite.
  std::optional<int> score;
  // Present iff score is finite, with chain->depth() == *score.
  std::optional<RoleChain> chain;
  std::vector<Probe> trace;

  bool finite() const { return score.has_value(); }
};

// from and to may name concepts or instances; instances stand for their
// class. Among chains of minimal depth the witness is the first one in
// role-declaration order.
ProximityResult ProximityScore(const Kb &kb, std::string_view from,
                               std::string_view to,
                               int max_depth = kDefaultMaxDepth);

struct BridgeProbeResult {
  // Depth at which the sweep stopped with at least one hit.
  std::optional<int> depth;
  // Every candidate connecting at that depth, in candidate order, with its
  // position in the candidate list and its witness chain.
  std::vector<std::string> winners;
  std::vector<size_t> winner_indices;
  std::vector<RoleChain> chains;
  // Probes depth-major and candidate-minor, ending with the first successful
  // probe.
  std::vector<Probe> trace;
};

// Probes each candidate at depth 1, then all at depth 2, and so on. The trace
// stops at the first candidate that connects to target; the winners are all
// candidates connecting at that depth.
BridgeProbeResult BridgeProbe(const Kb &kb,
                              std::span<const std::string> candidates,
                              std::string_view target,
                              int max_depth = kDefaultMaxDepth);

}  // namespace ellipsis

#endif  // ELLIPSIS_PROXIMITY_H_
