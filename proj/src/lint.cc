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

#include "ellipsis/lint.h"

#include <algorithm>
#include <set>
#include <sstream>

namespace ellipsis {

namespace {

std::vector<std::string> TopLevel(const Kb &kb) {
  std::vector<std::string> result;
  for (const auto &c : kb.concepts()) {
    if (c.parents.empty()) result.push_back(c.name);
  }
  return result;
}

int LongestChain(const Kb &kb, const std::string &from,
                 std::set<std::string> &on_path) {
  int best = 0;
  on_path.insert(from);
  for (const auto &hop : kb.OutgoingRoles(from)) {
    if (!kb.IsPartOfRole(hop.role)) continue;
    if (on_path.count(hop.range) > 0) {
      best = std::max(best, 1);
      continue;
    }
    best = std::max(best, 1 + LongestChain(kb, hop.range, on_path));
  }
  on_path.erase(from);
  return best;
}

}  // namespace

BasicCategoryReport LintBasicCategories(const Kb &kb) {
  BasicCategoryReport report;
  report.top_level = TopLevel(kb);

  for (const auto &instance : kb.instances()) {
    std::vector<std::string> categories;
    for (const auto &top : report.top_level) {
      if (kb.Subsumes(top, instance.concept_name)) categories.push_back(top);
    }
    if (categories.size() != 1) {
      report.ambiguous_instances.push_back({instance.name, categories});
    }
  }
  for (const auto &c : kb.concepts()) {
    if (kb.PartitionOf(c.name).empty()) report.untagged.push_back(c.name);
  }
  return report;
}

int DecompositionDepth(const Kb &kb, const std::string &concept_name) {
  std::set<std::string> on_path;
  return LongestChain(kb, concept_name, on_path);
}

size_t BalancedDeepeningReport::violations() const {
  return std::count_if(categories.begin(), categories.end(),
                       [](const CategoryDepth &c) { return c.flagged; });
}

BalancedDeepeningReport LintBalancedDeepening(const Kb &kb, int threshold) {
  BalancedDeepeningReport report;
  report.threshold = threshold;
  for (const auto &top : TopLevel(kb)) {
    CategoryDepth entry;
    entry.category = top;
    bool any = false;
    for (const auto &c : kb.concepts()) {
      if (!kb.Subsumes(top, c.name)) continue;
      int depth = DecompositionDepth(kb, c.name);
      if (depth == 0) continue;
      if (!any) {
        entry.max_depth = entry.min_depth = depth;
        any = true;
      } else {
        entry.max_depth = std::max(entry.max_depth, depth);
        entry.min_depth = std::min(entry.min_depth, depth);
      }
    }
    entry.flagged = entry.max_depth - entry.min_depth > threshold;
    report.categories.push_back(entry);
  }
  return report;
}

std::string FormatReport(const BasicCategoryReport &report) {
  std::ostringstream out;
  out << "basic-categories:";
  for (const auto &top : report.top_level) out << " " << top;
  out << "\n";
  for (const auto &a : report.ambiguous_instances) {
    out << "  ambiguous-instance " << a.instance << " categories="
        << a.categories.size();
    for (const auto &c : a.categories) out << " " << c;
    out << "\n";
  }
  for (const auto &c : report.untagged) {
    out << "  untagged-concept " << c << "\n";
  }
  out << "  violations: " << report.violations() << "\n";
  return out.str();
}

std::string FormatReport(const BalancedDeepeningReport &report) {
  std::ostringstream out;
  out << "balanced-deepening: threshold=" << report.threshold << "\n";
  for (const auto &c : report.categories) {
    out << "  " << c.category << " max=" << c.max_depth
        << " min=" << c.min_depth;
    if (c.flagged) out << " FLAGGED";
    out << "\n";
  }
  out << "  violations: " << report.violations() << "\n";
  return out.str();
}

}  // namespace ellipsis
