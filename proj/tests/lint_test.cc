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

#include "gtest/gtest.h"
#include "oracles.h"

namespace ellipsis {
namespace {

using testing::ReadData;

TEST(BasicCategoriesTest, HardwareHasNoViolations) {
  Kb kb = LoadKb(ReadData("hardware.kb"));
  BasicCategoryReport report = LintBasicCategories(kb);
  EXPECT_EQ(report.top_level,
            (std::vector<std::string>{"HARDWARE", "COMPANY"}));
  EXPECT_EQ(report.violations(), 0u) << FormatReport(report);
}

TEST(BasicCategoriesTest, DiamondInstanceIsFlagged) {
  Kb kb = LoadKb(
      "concept HARDWARE partition hw\n"
      "concept SOFTWARE partition sw\n"
      "concept FIRMWARE isa HARDWARE SOFTWARE\n"
      "instance BIOS-1 : FIRMWARE\n"
      "instance DISK-1 : HARDWARE\n");
  BasicCategoryReport report = LintBasicCategories(kb);
  ASSERT_EQ(report.ambiguous_instances.size(), 1u);
  EXPECT_EQ(report.ambiguous_instances[0].instance, "BIOS-1");
  EXPECT_EQ(report.ambiguous_instances[0].categories,
            (std::vector<std::string>{"HARDWARE", "SOFTWARE"}));
}

TEST(BasicCategoriesTest, UntaggedConceptsAreListed) {
  Kb kb = LoadKb("concept THING\nconcept PART isa THING\n"
                 "concept TAGGED partition t\n");
  BasicCategoryReport report = LintBasicCategories(kb);
  EXPECT_EQ(report.untagged, (std::vector<std::string>{"THING", "PART"}));
  EXPECT_EQ(report.violations(), 2u);
}

TEST(BasicCategoriesTest, EmptyKbGivesEmptyReport) {
  EXPECT_TRUE(LintBasicCategories(Kb()).empty());
}

TEST(BalancedDeepeningTest, ImbalancedSiblingsAreFlagged) {
  Kb kb = LoadKb(ReadData("imbalanced.kb"));
  EXPECT_EQ(DecompositionDepth(kb, "DEVICE"), 4);
  EXPECT_EQ(DecompositionDepth(kb, "SENSOR"), 1);
  BalancedDeepeningReport report = LintBalancedDeepening(kb, 2);
  ASSERT_EQ(report.categories.size(), 1u);
  EXPECT_EQ(report.categories[0].max_depth, 4);
  EXPECT_EQ(report.categories[0].min_depth, 1);
  EXPECT_TRUE(report.categories[0].flagged);
  EXPECT_EQ(report.violations(), 1u);
  EXPECT_FALSE(LintBalancedDeepening(kb, 3).categories[0].flagged);
}

TEST(BalancedDeepeningTest, SingleConceptHasZeroDepth) {
  Kb kb = LoadKb("concept ONLY partition p\n");
  BalancedDeepeningReport report = LintBalancedDeepening(kb);
  ASSERT_EQ(report.categories.size(), 1u);
  EXPECT_EQ(report.categories[0].max_depth, 0);
  EXPECT_EQ(report.categories[0].min_depth, 0);
  EXPECT_FALSE(report.categories[0].flagged);
}

TEST(BalancedDeepeningTest, HardwareIsBalanced) {
  Kb kb = LoadKb(ReadData("hardware.kb"));
  // COMPUTER-SYSTEM and NOTEBOOK decompose 3 deep, CENTRAL-UNIT 2, the
  // motherboards 1. Companies have no part-of decomposition.
  EXPECT_EQ(DecompositionDepth(kb, "NOTEBOOK"), 3);
  EXPECT_EQ(DecompositionDepth(kb, "CENTRAL-UNIT"), 2);
  EXPECT_EQ(DecompositionDepth(kb, "PCI-MOTHERBOARD"), 1);
  EXPECT_EQ(DecompositionDepth(kb, "COMPUTER-MANUFACTURER"), 0);
  BalancedDeepeningReport report = LintBalancedDeepening(kb);
  ASSERT_EQ(report.categories.size(), 2u);
  EXPECT_EQ(report.categories[0].category, "HARDWARE");
  EXPECT_EQ(report.categories[0].max_depth, 3);
  EXPECT_EQ(report.categories[0].min_depth, 1);
  EXPECT_EQ(report.violations(), 0u) << FormatReport(report);
}

TEST(BalancedDeepeningTest, CyclesTerminate) {
  Kb kb = LoadKb("role has-part\nconcept A partition p\nconcept B isa A\n"
                 "permit A has-part B\npermit B has-part A\n");
  EXPECT_LE(DecompositionDepth(kb, "A"), 3);
}

}  // namespace
}  // namespace ellipsis
