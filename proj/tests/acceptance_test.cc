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

// Acceptance suite. Prints one PASS or FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ellipsis/centering.h"
#include "ellipsis/discourse.h"
#include "ellipsis/kb.h"
#include "ellipsis/protocol.h"
#include "ellipsis/proximity.h"
#include "ellipsis/resolver.h"
#include "ellipsis/transcript.h"
#include "oracles.h"

namespace ellipsis {
namespace {

using testing::BruteForcePreferredBridges;
using testing::BruteForceProximity;
using testing::RandomKb;
using testing::ReadData;

constexpr double kGoldenBudgetSeconds = 1.0;
constexpr double kLawsBudgetSeconds = 1.0;
constexpr int kProximityFixtures = 250;
constexpr int kPairsPerFixture = 20;
constexpr int kBridgeInstances = 250;
constexpr int kRandomMaxDepth = 5;
constexpr uint32_t kSeed = 20260101;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double Seconds(const std::function<void()> &f) {
  auto start = std::chrono::steady_clock::now();
  f();
  std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  return elapsed.count();
}

std::string Format(double seconds) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << seconds << "s";
  return out.str();
}

struct Loaded {
  Kb kb;
  DiscourseDocument doc;
  Loaded(const std::string &kb_file, const std::string &disc_file)
      : kb(LoadKb(ReadData(kb_file))),
        doc(LoadDiscourse(ReadData(disc_file), kb)) {}
};

Outcome GoldenTranscript(const std::string &disc_file,
                         const std::string &expected) {
  std::string actual;
  double seconds = Seconds([&] {
    Loaded f("hardware.kb", disc_file);
    DiscourseResult result = RunDiscourse(f.kb, f.doc);
    for (const auto &episode : result.episodes) actual += EmitTranscript(episode);
  });
  Outcome o;
  o.pass = actual == expected && seconds < kGoldenBudgetSeconds;
  o.detail = (actual == expected ? "byte-identical" : "differs:\n" + actual) +
             ", " + Format(seconds);
  return o;
}

Outcome ProximityOracle() {
  std::mt19937 rng(kSeed);
  int pairs = 0;
  int finite = 0;
  int mismatches = 0;
  for (int fixture = 0; fixture < kProximityFixtures; ++fixture) {
    Kb kb = RandomKb(rng);
    const auto &concepts = kb.concepts();
    std::uniform_int_distribution<size_t> pick(0, concepts.size() - 1);
    for (int k = 0; k < kPairsPerFixture; ++k) {
      const std::string &from = concepts[pick(rng)].name;
      const std::string &to = concepts[pick(rng)].name;
      auto actual = ProximityScore(kb, from, to, kRandomMaxDepth).score;
      auto expected = BruteForceProximity(kb, from, to, kRandomMaxDepth).score;
      ++pairs;
      if (expected) ++finite;
      if (actual != expected) ++mismatches;
    }
  }
  return {mismatches == 0 && finite > 0,
          std::to_string(kProximityFixtures) + " fixtures, " +
              std::to_string(pairs) + " pairs (" + std::to_string(finite) +
              " finite), " + std::to_string(mismatches) + " mismatches"};
}

Outcome BridgeOracle() {
  std::mt19937 rng(kSeed + 1);
  const auto categories = AllCategories();
  int resolved = 0;
  int mismatches = 0;
  auto noun = [&](const Kb &kb, const std::string &id, int utterance) {
    Phrase p;
    p.id = id;
    p.surface = id;
    p.word_class = rng() % 2 ? WordClass::kNoun : WordClass::kProperNoun;
    p.binding = kb.instances()[rng() % kb.instances().size()].name;
    p.category = categories[rng() % categories.size()];
    p.utterance = utterance;
    return p;
  };
  for (int instance = 0; instance < kBridgeInstances; ++instance) {
    Kb kb = RandomKb(rng);
    CenterState prior;
    prior.utterance = 1;
    const int n = 1 + rng() % 6;
    for (int i = 0; i < n; ++i) {
      prior.cf.push_back(noun(kb, "x" + std::to_string(i), 1));
    }
    Phrase y = noun(kb, "y", 2);
    y.has_definite_det = true;
    auto actual = PreferredConceptualBridge(kb, y, prior, kRandomMaxDepth);
    auto expected = BruteForcePreferredBridges(kb, y, prior, kRandomMaxDepth);
    bool same = actual ? !expected.empty() && actual->antecedent == expected[0]
                       : expected.empty();
    if (!same) ++mismatches;
    if (actual) ++resolved;
  }
  return {mismatches == 0 && resolved > 0,
          std::to_string(kBridgeInstances) + " instances (" +
              std::to_string(resolved) + " resolved), " +
              std::to_string(mismatches) + " mismatches"};
}

Outcome PreferenceLaws() {
  int violations = 0;
  int checks = 0;
  double seconds = Seconds([&] {
    const auto all = AllCategories();
    auto check = [&](bool ok) {
      ++checks;
      if (!ok) ++violations;
    };
    for (const auto &a : all) {
      check(CompareTc(a, a) == Preference::kEqual);
      for (const auto &b : all) {
        Preference ab = CompareTc(a, b);
        Preference ba = CompareTc(b, a);
        check((ab == Preference::kAFirst) == (ba == Preference::kBFirst));
        check((ab == Preference::kEqual) == (ba == Preference::kEqual));
        if (a.is_anaphor() && !b.is_anaphor()) {
          check(ab == Preference::kAFirst);
        }
        for (const auto &c : all) {
          Preference bc = CompareTc(b, c);
          if (ab != Preference::kBFirst && bc != Preference::kBFirst) {
            check(CompareTc(a, c) != Preference::kBFirst);
          }
        }
      }
    }
    // Dispatch over every pair of anaphor kinds and grammatical functions.
    for (int ka = 0; ka < 4; ++ka) {
      for (int kb = 0; kb < 4; ++kb) {
        for (int fa = 0; fa < 4; ++fa) {
          for (int fb = 0; fb < 4; ++fb) {
            FunctionalCategory a(static_cast<AnaphorKind>(ka),
                                 static_cast<GrammaticalFunction>(fa));
            FunctionalCategory b(static_cast<AnaphorKind>(kb),
                                 static_cast<GrammaticalFunction>(fb));
            int ra = ka == kb ? fa : ka;
            int rb = ka == kb ? fb : kb;
            Preference expected = ra < rb   ? Preference::kAFirst
                                  : rb < ra ? Preference::kBFirst
                                            : Preference::kEqual;
            check(CompareTc(a, b) == expected);
          }
        }
      }
    }
    // Non-anaphoric kinds against each other and against anaphors.
    for (int ka = 1; ka < 5; ++ka) {
      for (int kb = 1; kb < 5; ++kb) {
        FunctionalCategory a(static_cast<TcKind>(ka));
        FunctionalCategory b(static_cast<TcKind>(kb));
        Preference expected = ka < kb   ? Preference::kAFirst
                              : kb < ka ? Preference::kBFirst
                                        : Preference::kEqual;
        check(CompareTc(a, b) == expected);
      }
    }
  });
  return {violations == 0 && seconds < kLawsBudgetSeconds,
          std::to_string(checks) + " checks, " + std::to_string(violations) +
              " violations, " + Format(seconds)};
}

Outcome TieBreak() {
  Loaded f("tie.kb", "tie.disc");
  const Phrase &piston = *f.doc.utterances[1].Find("piston");
  CenterState prior = RankCf(f.doc.utterances[0]);
  auto r = PreferredConceptualBridge(f.kb, piston, prior);
  auto expected = BruteForcePreferredBridges(f.kb, piston, prior, 5);
  if (!r) return {false, "unresolved"};
  bool ok = r->antecedent.binding == "CAR-0002" && r->tie_broken_by_tc &&
            r->chain.depth() == 2 && expected.size() == 1 &&
            expected[0] == r->antecedent;
  return {ok, "winner " + *r->antecedent.binding + " depth=" +
                  std::to_string(r->chain.depth()) + " tie-broken-by-tc=" +
                  (r->tie_broken_by_tc ? "true" : "false")};
}

Outcome DepthAndPartition() {
  Loaded chain("depth6.kb", "depth6.disc");
  DiscourseResult at5 = RunDiscourse(chain.kb, chain.doc, {5});
  DiscourseResult at6 = RunDiscourse(chain.kb, chain.doc, {6});
  bool cap = at5.resolutions.empty() && at5.unresolved.size() == 1 &&
             at6.resolutions.size() == 1 &&
             at6.resolutions[0].chain.depth() == 6;

  Loaded part("partition.kb", "partition.disc");
  bool confined = true;
  for (int depth = 1; depth <= 10; ++depth) {
    DiscourseResult r = RunDiscourse(part.kb, part.doc, {depth});
    if (!r.resolutions.empty()) confined = false;
    if (ProximityScore(part.kb, "LIVER-0001", "CELL-0002", depth).finite()) {
      confined = false;
    }
  }
  return {cap && confined,
          std::string("length-6 chain ") +
              (cap ? "unresolved at 5, resolved at 6" : "wrong") +
              "; cross-partition chain " +
              (confined ? "never returned at depths 1-10" : "returned")};
}

Outcome Transparency() {
  struct Case {
    std::string kb;
    std::string disc;
    std::string target;
  };
  std::vector<Case> cases{{"hardware.kb", "frag1.disc", "cpu"},
                          {"hardware.kb", "frag2.disc", "cpu"},
                          {"tie.kb", "tie.disc", "piston"}};
  bool same = true;
  for (const auto &c : cases) {
    Loaded f(c.kb, c.disc);
    DiscourseResult via_messages = RunDiscourse(f.kb, f.doc);
    auto direct = PreferredConceptualBridge(
        f.kb, *f.doc.utterances[1].Find(c.target), RankCf(f.doc.utterances[0]));
    if (!direct || via_messages.resolutions.size() != 1 ||
        !(via_messages.resolutions[0] == *direct)) {
      same = false;
    }
  }
  Loaded frag1("hardware.kb", "frag1.disc");
  DiscourseResult r = RunDiscourse(frag1.kb, frag1.doc);
  int phase1 = 0;
  int phase2 = 0;
  int found = 0;
  for (const auto &entry : r.log) {
    const Message &m = entry.message;
    if (m.type == MessageType::kSearchTextEllipsisAntecedent) {
      if (m.phase == 1) ++phase1;
      if (m.phase == 2) ++phase2;
    }
    if (m.type == MessageType::kTextEllipsisAntecedentFound) ++found;
  }
  bool counts = phase1 == 1 && phase2 == 1 && found == 1;
  return {same && counts,
          std::string("resolutions ") + (same ? "identical" : "differ") +
              "; fragment one log phase1=" + std::to_string(phase1) +
              " phase2=" + std::to_string(phase2) +
              " found=" + std::to_string(found)};
}

int RunAll() {
  const std::string golden_one =
      "(preferred-cb (PCI-MOTHERBOARD-0004 COMPAQ LTE-LITE-25) CPU-0005)\n"
      "PCI-MOTHERBOARD-0004 - depth:1 TRUE\n"
      "==> (PCI-MOTHERBOARD-0004 HAS-CPU CPU-0005)\n";
  const std::string golden_two =
      "(preferred-cb (LCD-DISPLAY-0008 COMPAQ LTE-LITE-25) CPU-0009)\n"
      "LCD-DISPLAY-0008 - depth:1 NIL\n"
      "COMPAQ - depth:1 NIL\n"
      "LTE-LITE-25 - depth:1 NIL\n"
      "LCD-DISPLAY-0008 - depth:2 NIL\n"
      "COMPAQ - depth:2 NIL\n"
      "LTE-LITE-25 - depth:2 NIL\n"
      "LCD-DISPLAY-0008 - depth:3 NIL\n"
      "COMPAQ - depth:3 NIL\n"
      "LTE-LITE-25 - depth:3 TRUE\n"
      "==> (LTE-LITE-25 (COMPOSE HAS-CENTRAL-UNIT HAS-MOTHERBOARD HAS-CPU) "
      "CPU-0009)\n";

  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {"golden transcript, fragment one",
       [&] { return GoldenTranscript("frag1.disc", golden_one); }},
      {"golden transcript, fragment two",
       [&] { return GoldenTranscript("frag2.disc", golden_two); }},
      {"proximity score matches brute-force enumeration", ProximityOracle},
      {"preferred bridge matches the literal formula", BridgeOracle},
      {"topic/comment preference laws", PreferenceLaws},
      {"tie broken by topic/comment rank", TieBreak},
      {"depth cap and partition confinement", DepthAndPartition},
      {"message protocol is transparent", Transparency},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1)
              << ": " << criteria[i].name << " (" << o.detail << ")\n";
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace ellipsis

int main() { return ellipsis::RunAll(); }
