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

// Knowledge-engineering checks over a Kb. Path-length proximity is only
// meaningful when the upper ontology is partitioned into basic categories and
// the categories are decomposed to comparable depth; these reports flag
// knowledge bases that violate either condition. Both are report-only.

#ifndef ELLIPSIS_LINT_H_
#define ELLIPSIS_LINT_H_

#include <string>
#include <vector>

#include "ellipsis/kb.h"

namespace ellipsis {

struct BasicCategoryReport {
  struct AmbiguousInstance {
    std::string instance;
    std::vector<std::string> categories;
  };

  // Concepts without an isa parent, in declaration order.
  std::vector<std::string> top_level;
  // Instances whose class does not descend from exactly one top-level
  // category.
  std::vector<AmbiguousInstance> ambiguous_instances;
  // Concepts that neither carry nor inherit a partition tag.
  std::vector<std::string> untagged;

  size_t violations() const {
    return ambiguous_instances.size() + untagged.size();
  }
  bool empty() const {
    return top_level.empty() && violations() == 0;
  }
};

BasicCategoryReport LintBasicCategories(const Kb &kb);

struct CategoryDepth {
  std::string category;
  // Extremes of part-of decomposition depth over the category's descendants
  // that decompose at all; both 0 when none does.
  int max_depth = 0;
  int min_depth = 0;
  bool flagged = false;
};

struct BalancedDeepeningReport {
  int threshold = 2;
  std::vector<CategoryDepth> categories;

  size_t violations() const;
};

inline constexpr int kDefaultDeepeningThreshold = 2;

BalancedDeepeningReport LintBalancedDeepening(
    const Kb &kb, int threshold = kDefaultDeepeningThreshold);

// Length of the longest acyclic chain of part-of-type roles starting at the
// concept.
int DecompositionDepth(const Kb &kb, const std::string &concept_name);

std::string FormatReport(const BasicCategoryReport &report);
std::string FormatReport(const BalancedDeepeningReport &report);

}  // namespace ellipsis

#endif  // ELLIPSIS_LINT_H_
