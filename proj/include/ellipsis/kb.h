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

// Terminological knowledge base: a concept taxonomy, a role taxonomy rooted
// in the mereological role has-part, the permit relation over
// (concept, role, concept) triples, concept instances and subworld
// partitions.
//
// A Kb is immutable once built. Subsumption closures, effective partitions
// and inherited role sets are computed once by KbBuilder::Build().

#ifndef ELLIPSIS_KB_H_
#define ELLIPSIS_KB_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ellipsis {

// Name of the distinguished root of all part-of-type roles.
inline constexpr std::string_view kHasPart = "has-part";

struct ConceptDecl {
  std::string name;
  std::vector<std::string> parents;
  std::optional<std::string> partition;

  bool operator==(const ConceptDecl &other) const = default;
};

struct RoleDecl {
  std::string name;
  std::optional<std::string> parent;

  bool operator==(const RoleDecl &other) const = default;
};

struct PermitTriple {
  std::string domain;
  std::string role;
  std::string range;

  bool operator==(const PermitTriple &other) const = default;
};

struct InstanceDecl {
  std::string name;
  std::string concept_name;

  bool operator==(const InstanceDecl &other) const = default;
};

// One inherited role edge leaving a concept: (role, value restriction).
struct RoleHop {
  std::string role;
  std::string range;

  bool operator==(const RoleHop &other) const = default;
};

class KbBuilder;

class Kb {
 public:
  Kb() = default;

  bool empty() const {
    return concepts_.empty() && roles_.empty() && instances_.empty();
  }

  // Declarations in the order they were added.
  const std::vector<ConceptDecl> &concepts() const { return concepts_; }
  const std::vector<RoleDecl> &roles() const { return roles_; }
  const std::vector<PermitTriple> &permits() const { return permits_; }
  const std::vector<InstanceDecl> &instances() const { return instances_; }

  bool HasConcept(std::string_view name) const;
  bool HasRole(std::string_view name) const;
  bool HasInstance(std::string_view name) const;

  const ConceptDecl &Concept(std::string_view name) const;
  const InstanceDecl &Instance(std::string_view name) const;

  // Maps a concept name to itself and an instance name to its class. Throws
  // kUnknownName for anything else.
  const std::string &ResolveConcept(std::string_view name) const;

  // True iff the role's taxonomy ancestry reaches has-part.
  bool IsPartOfRole(std::string_view role) const;

  // Position of the role in declaration order.
  int RoleRank(std::string_view role) const;

  // Effective partition tag; empty for the implicit default partition.
  const std::string &PartitionOf(std::string_view concept_name) const;

  // True iff descendant == ancestor or a directed isa path leads from
  // descendant to ancestor.
  bool Subsumes(std::string_view ancestor, std::string_view descendant) const;

  // Strict isa ancestors of a concept, nearest first.
  std::vector<std::string> Ancestors(std::string_view concept_name) const;

  // Role edges declared on the concept or any of its ancestors, ordered by
  // role declaration rank and then by permit declaration order.
  const std::vector<RoleHop> &OutgoingRoles(std::string_view concept_name) const;

  // Stable content hash over the canonical serialization.
  std::size_t Fingerprint() const;

  // Declaration-level equality.
  bool operator==(const Kb &other) const {
    return concepts_ == other.concepts_ && roles_ == other.roles_ &&
           permits_ == other.permits_ && instances_ == other.instances_;
  }

 private:
  friend class KbBuilder;

  int ConceptIndex(std::string_view name) const;

  std::vector<ConceptDecl> concepts_;
  std::vector<RoleDecl> roles_;
  std::vector<PermitTriple> permits_;
  std::vector<InstanceDecl> instances_;

  std::unordered_map<std::string, int> concept_index_;
  std::unordered_map<std::string, int> role_index_;
  std::unordered_map<std::string, int> instance_index_;

  // Per concept: reflexive-transitive ancestor flags, indexed by concept.
  std::vector<std::vector<bool>> ancestor_;
  std::vector<std::vector<int>> ancestor_order_;
  std::vector<std::string> partition_;
  std::vector<std::vector<RoleHop>> outgoing_;
  std::vector<bool> part_of_role_;
};

// Collects declarations in any order and validates them as a whole.
class KbBuilder {
 public:
  KbBuilder &AddConcept(std::string name, std::vector<std::string> parents = {},
                        std::optional<std::string> partition = std::nullopt,
                        int line = 0);
  KbBuilder &AddRole(std::string name,
                     std::optional<std::string> parent = std::nullopt,
                     int line = 0);
  KbBuilder &AddPermit(std::string domain, std::string role, std::string range,
                       int line = 0);
  KbBuilder &AddInstance(std::string name, std::string concept_name,
                         int line = 0);

  // Throws Error on dangling references, cycles, duplicates or partition
  // conflicts.
  Kb Build() const;

 private:
  std::vector<std::pair<ConceptDecl, int>> concepts_;
  std::vector<std::pair<RoleDecl, int>> roles_;
  std::vector<std::pair<PermitTriple, int>> permits_;
  std::vector<std::pair<InstanceDecl, int>> instances_;
};

// Free-function forms of the Kb queries.
inline bool Subsumes(const Kb &kb, std::string_view ancestor,
                     std::string_view descendant) {
  return kb.Subsumes(ancestor, descendant);
}

inline const std::vector<RoleHop> &OutgoingRoles(const Kb &kb,
                                                 std::string_view from) {
  return kb.OutgoingRoles(from);
}

// Parses the line-oriented KB format:
//
//   concept <NAME> [isa <NAME> ...] [partition <TAG>]
//   role <name> [isa <name>]
//   permit <CONCEPT> <role> <CONCEPT>
//   instance <NAME> : <CONCEPT>
//
// '#' starts a comment. Forward references are allowed.
Kb LoadKb(std::string_view source);

// Canonical text form accepted by LoadKb.
std::string SerializeKb(const Kb &kb);

}  // namespace ellipsis

#endif  // ELLIPSIS_KB_H_
