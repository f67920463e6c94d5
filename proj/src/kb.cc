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

#include "ellipsis/kb.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>

#include "ellipsis/error.h"
#include "ellipsis/text.h"

namespace ellipsis {

namespace {

std::string Quote(std::string_view name) {
  return "'" + std::string(name) + "'";
}

}  // namespace

int Kb::ConceptIndex(std::string_view name) const {
  auto it = concept_index_.find(std::string(name));
  if (it == concept_index_.end()) {
    throw Error(ErrorCode::kUnknownName, "unknown concept " + Quote(name));
  }
  return it->second;
}

bool Kb::HasConcept(std::string_view name) const {
  return concept_index_.count(std::string(name)) > 0;
}

bool Kb::HasRole(std::string_view name) const {
  return role_index_.count(std::string(name)) > 0;
}

bool Kb::HasInstance(std::string_view name) const {
  return instance_index_.count(std::string(name)) > 0;
}

const ConceptDecl &Kb::Concept(std::string_view name) const {
  return concepts_[ConceptIndex(name)];
}

const InstanceDecl &Kb::Instance(std::string_view name) const {
  auto it = instance_index_.find(std::string(name));
  if (it == instance_index_.end()) {
    throw Error(ErrorCode::kUnknownName, "unknown instance " + Quote(name));
  }
  return instances_[it->second];
}

const std::string &Kb::ResolveConcept(std::string_view name) const {
  auto c = concept_index_.find(std::string(name));
  if (c != concept_index_.end()) return concepts_[c->second].name;
  auto i = instance_index_.find(std::string(name));
  if (i != instance_index_.end()) return instances_[i->second].concept_name;
  throw Error(ErrorCode::kUnknownName,
              "no concept or instance named " + Quote(name));
}

bool Kb::IsPartOfRole(std::string_view role) const {
  auto it = role_index_.find(std::string(role));
  if (it == role_index_.end()) {
    throw Error(ErrorCode::kUnknownName, "unknown role " + Quote(role));
  }
  return part_of_role_[it->second];
}

int Kb::RoleRank(std::string_view role) const {
  auto it = role_index_.find(std::string(role));
  if (it == role_index_.end()) {
    throw Error(ErrorCode::kUnknownName, "unknown role " + Quote(role));
  }
  return it->second;
}

const std::string &Kb::PartitionOf(std::string_view concept_name) const {
  return partition_[ConceptIndex(concept_name)];
}

bool Kb::Subsumes(std::string_view ancestor,
                  std::string_view descendant) const {
  int a = ConceptIndex(ancestor);
  int d = ConceptIndex(descendant);
  return ancestor_[d][a];
}

std::vector<std::string> Kb::Ancestors(std::string_view concept_name) const {
  std::vector<std::string> result;
  for (int a : ancestor_order_[ConceptIndex(concept_name)]) {
    result.push_back(concepts_[a].name);
  }
  return result;
}

const std::vector<RoleHop> &Kb::OutgoingRoles(
    std::string_view concept_name) const {
  return outgoing_[ConceptIndex(concept_name)];
}

std::size_t Kb::Fingerprint() const {
  return std::hash<std::string>{}(SerializeKb(*this));
}

KbBuilder &KbBuilder::AddConcept(std::string name,
                                 std::vector<std::string> parents,
                                 std::optional<std::string> partition,
                                 int line) {
  concepts_.push_back(
      {ConceptDecl{std::move(name), std::move(parents), std::move(partition)},
       line});
  return *this;
}

KbBuilder &KbBuilder::AddRole(std::string name,
                              std::optional<std::string> parent, int line) {
  roles_.push_back({RoleDecl{std::move(name), std::move(parent)}, line});
  return *this;
}

KbBuilder &KbBuilder::AddPermit(std::string domain, std::string role,
                                std::string range, int line) {
  permits_.push_back(
      {PermitTriple{std::move(domain), std::move(role), std::move(range)},
       line});
  return *this;
}

KbBuilder &KbBuilder::AddInstance(std::string name, std::string concept_name,
                                  int line) {
  instances_.push_back(
      {InstanceDecl{std::move(name), std::move(concept_name)}, line});
  return *this;
}

Kb KbBuilder::Build() const {
  Kb kb;

  // Names.
  for (const auto &[decl, line] : concepts_) {
    if (decl.name.empty()) {
      throw Error(ErrorCode::kParse, "empty concept name", line);
    }
    if (!kb.concept_index_.emplace(decl.name, kb.concepts_.size()).second) {
      throw Error(ErrorCode::kDuplicateDeclaration,
                  "concept " + Quote(decl.name) + " declared twice", line);
    }
    kb.concepts_.push_back(decl);
  }
  for (const auto &[decl, line] : roles_) {
    if (decl.name.empty()) {
      throw Error(ErrorCode::kParse, "empty role name", line);
    }
    if (!kb.role_index_.emplace(decl.name, kb.roles_.size()).second) {
      throw Error(ErrorCode::kDuplicateDeclaration,
                  "role " + Quote(decl.name) + " declared twice", line);
    }
    kb.roles_.push_back(decl);
  }
  for (const auto &[decl, line] : instances_) {
    if (decl.name.empty()) {
      throw Error(ErrorCode::kParse, "empty instance name", line);
    }
    if (kb.concept_index_.count(decl.name) > 0 ||
        !kb.instance_index_.emplace(decl.name, kb.instances_.size()).second) {
      throw Error(ErrorCode::kDuplicateDeclaration,
                  "instance " + Quote(decl.name) + " declared twice", line);
    }
    kb.instances_.push_back(decl);
  }

  // References.
  auto require_concept = [&](const std::string &name, int line) {
    if (kb.concept_index_.count(name) == 0) {
      throw Error(ErrorCode::kDanglingReference,
                  "undeclared concept " + Quote(name), line);
    }
  };
  auto require_role = [&](const std::string &name, int line) {
    if (kb.role_index_.count(name) == 0) {
      throw Error(ErrorCode::kDanglingReference,
                  "undeclared role " + Quote(name), line);
    }
  };
  for (const auto &[decl, line] : concepts_) {
    for (const auto &parent : decl.parents) require_concept(parent, line);
  }
  for (const auto &[decl, line] : roles_) {
    if (decl.parent) require_role(*decl.parent, line);
  }
  for (const auto &[decl, line] : permits_) {
    require_concept(decl.domain, line);
    require_role(decl.role, line);
    require_concept(decl.range, line);
    kb.permits_.push_back(decl);
  }
  for (const auto &[decl, line] : instances_) {
    require_concept(decl.concept_name, line);
  }

  // Role taxonomy: forest, part-of typing.
  const int num_roles = kb.roles_.size();
  auto role_parent = [&](int r) {
    const auto &parent = kb.roles_[r].parent;
    return parent ? kb.role_index_.at(*parent) : -1;
  };
  for (int r = 0; r < num_roles; ++r) {
    int current = r;
    for (int steps = 0; current >= 0; ++steps) {
      if (steps > num_roles) {
        throw Error(ErrorCode::kRoleCycle,
                    "role taxonomy cycle through " + Quote(kb.roles_[r].name),
                    roles_[r].second);
      }
      current = role_parent(current);
    }
  }
  kb.part_of_role_.assign(num_roles, false);
  for (int r = 0; r < num_roles; ++r) {
    for (int current = r; current >= 0; current = role_parent(current)) {
      if (kb.roles_[current].name == kHasPart) {
        kb.part_of_role_[r] = true;
        break;
      }
    }
  }

  // Concept taxonomy must be acyclic.
  const int num_concepts = kb.concepts_.size();
  std::vector<std::vector<int>> parents(num_concepts);
  for (int c = 0; c < num_concepts; ++c) {
    for (const auto &p : kb.concepts_[c].parents) {
      parents[c].push_back(kb.concept_index_.at(p));
    }
  }
  {
    enum { kWhite, kGrey, kBlack };
    std::vector<int> color(num_concepts, kWhite);
    std::function<void(int)> visit = [&](int c) {
      color[c] = kGrey;
      for (int p : parents[c]) {
        if (color[p] == kGrey) {
          throw Error(ErrorCode::kIsaCycle,
                      "isa cycle through " + Quote(kb.concepts_[p].name),
                      concepts_[c].second);
        }
        if (color[p] == kWhite) visit(p);
      }
      color[c] = kBlack;
    };
    for (int c = 0; c < num_concepts; ++c) {
      if (color[c] == kWhite) visit(c);
    }
  }

  // Ancestor closure in breadth-first (nearest first) order.
  kb.ancestor_.assign(num_concepts, std::vector<bool>(num_concepts, false));
  kb.ancestor_order_.assign(num_concepts, {});
  for (int c = 0; c < num_concepts; ++c) {
    kb.ancestor_[c][c] = true;
    std::deque<int> queue(parents[c].begin(), parents[c].end());
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      if (kb.ancestor_[c][a]) continue;
      kb.ancestor_[c][a] = true;
      kb.ancestor_order_[c].push_back(a);
      for (int p : parents[a]) queue.push_back(p);
    }
  }

  // Partitions: an explicit tag must agree with every tagged ancestor; an
  // untagged concept takes the nearest tagged ancestor's tag.
  kb.partition_.assign(num_concepts, std::string());
  for (int c = 0; c < num_concepts; ++c) {
    const auto &own = kb.concepts_[c].partition;
    for (int a : kb.ancestor_order_[c]) {
      const auto &inherited = kb.concepts_[a].partition;
      if (own && inherited && *own != *inherited) {
        throw Error(ErrorCode::kPartitionConflict,
                    "concept " + Quote(kb.concepts_[c].name) +
                        " tagged " + Quote(*own) + " under " +
                        Quote(kb.concepts_[a].name) + " tagged " +
                        Quote(*inherited),
                    concepts_[c].second);
      }
    }
    if (own) {
      kb.partition_[c] = *own;
      continue;
    }
    for (int a : kb.ancestor_order_[c]) {
      if (kb.concepts_[a].partition) {
        kb.partition_[c] = *kb.concepts_[a].partition;
        break;
      }
    }
  }

  // Inherited role edges.
  std::vector<int> permit_order(kb.permits_.size());
  std::iota(permit_order.begin(), permit_order.end(), 0);
  std::stable_sort(permit_order.begin(), permit_order.end(),
                   [&](int a, int b) {
                     return kb.role_index_.at(kb.permits_[a].role) <
                            kb.role_index_.at(kb.permits_[b].role);
                   });
  kb.outgoing_.assign(num_concepts, {});
  for (int c = 0; c < num_concepts; ++c) {
    auto &hops = kb.outgoing_[c];
    for (int p : permit_order) {
      const auto &permit = kb.permits_[p];
      if (!kb.ancestor_[c][kb.concept_index_.at(permit.domain)]) continue;
      RoleHop hop{permit.role, permit.range};
      if (std::find(hops.begin(), hops.end(), hop) == hops.end()) {
        hops.push_back(std::move(hop));
      }
    }
  }

  return kb;
}

Kb LoadKb(std::string_view source) {
  KbBuilder builder;
  int line_number = 0;
  for (std::string_view line : SplitLines(source)) {
    ++line_number;
    std::vector<std::string> tokens = Tokenize(StripComment(line));
    if (tokens.empty()) continue;
    const std::string &keyword = tokens[0];
    auto fail = [&](const std::string &message) {
      throw Error(ErrorCode::kParse, message, line_number);
    };

    if (keyword == "concept") {
      if (tokens.size() < 2) fail("concept needs a name");
      std::vector<std::string> parents;
      std::optional<std::string> partition;
      size_t i = 2;
      if (i < tokens.size() && tokens[i] == "isa") {
        ++i;
        while (i < tokens.size() && tokens[i] != "partition") {
          parents.push_back(tokens[i++]);
        }
        if (parents.empty()) fail("isa needs at least one concept");
      }
      if (i < tokens.size() && tokens[i] == "partition") {
        if (i + 2 != tokens.size()) fail("partition takes exactly one tag");
        partition = tokens[i + 1];
        i = tokens.size();
      }
      if (i != tokens.size()) fail("unexpected token '" + tokens[i] + "'");
      builder.AddConcept(tokens[1], std::move(parents), std::move(partition),
                         line_number);
    } else if (keyword == "role") {
      if (tokens.size() == 2) {
        builder.AddRole(tokens[1], std::nullopt, line_number);
      } else if (tokens.size() == 4 && tokens[2] == "isa") {
        builder.AddRole(tokens[1], tokens[3], line_number);
      } else {
        fail("expected: role <name> [isa <name>]");
      }
    } else if (keyword == "permit") {
      if (tokens.size() != 4) fail("expected: permit <CONCEPT> <role> <CONCEPT>");
      builder.AddPermit(tokens[1], tokens[2], tokens[3], line_number);
    } else if (keyword == "instance") {
      if (tokens.size() != 4 || tokens[2] != ":") {
        fail("expected: instance <NAME> : <CONCEPT>");
      }
      builder.AddInstance(tokens[1], tokens[3], line_number);
    } else {
      fail("unknown declaration '" + keyword + "'");
    }
  }
  return builder.Build();
}

std::string SerializeKb(const Kb &kb) {
  std::ostringstream out;
  for (const auto &role : kb.roles()) {
    out << "role " << role.name;
    if (role.parent) out << " isa " << *role.parent;
    out << "\n";
  }
  for (const auto &c : kb.concepts()) {
    out << "concept " << c.name;
    if (!c.parents.empty()) {
      out << " isa";
      for (const auto &p : c.parents) out << " " << p;
    }
    if (c.partition) out << " partition " << *c.partition;
    out << "\n";
  }
  for (const auto &p : kb.permits()) {
    out << "permit " << p.domain << " " << p.role << " " << p.range << "\n";
  }
  for (const auto &i : kb.instances()) {
    out << "instance " << i.name << " : " << i.concept_name << "\n";
  }
  return out.str();
}

}  // namespace ellipsis
