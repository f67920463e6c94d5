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

// Resolves textual ellipsis in an annotated discourse against a knowledge
// base.
//
//   ellipsis --kb hardware.kb --text frag1.disc --transcript
//
// Output is assembled completely before anything is written, so input errors
// leave standard output empty.

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ellipsis/discourse.h"
#include "ellipsis/error.h"
#include "ellipsis/kb.h"
#include "ellipsis/lint.h"
#include "ellipsis/protocol.h"
#include "ellipsis/text.h"
#include "ellipsis/transcript.h"

namespace {

void WriteSummary(const ellipsis::DiscourseResult &result, std::ostream &out) {
  using ellipsis::ToUpper;
  out << "# " << ellipsis::kGateLabel << "\n";
  for (const auto &r : result.resolutions) {
    out << "resolved " << ToUpper(*r.target.binding) << " <- "
        << ToUpper(*r.antecedent.binding) << " " << ellipsis::FormatBridge(r)
        << " depth=" << r.chain.depth()
        << " tie-broken-by-tc=" << (r.tie_broken_by_tc ? "yes" : "no") << "\n";
  }
  for (const auto &p : result.unresolved) {
    out << "unresolved " << ToUpper(*p.binding) << "\n";
  }
  for (const auto &s : result.suppressed) {
    out << "skipped utterance=" << s.target.utterance << " phrase="
        << s.target.id << " (" << s.reason << ")\n";
  }
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Bridge textual ellipsis through part-of role chains"};
  std::string kb_path;
  std::string text_path;
  int max_depth = ellipsis::kDefaultMaxDepth;
  int lint_threshold = ellipsis::kDefaultDeepeningThreshold;
  bool transcript = false;
  bool summary = false;
  bool lint = false;
  bool log = false;
  app.add_option("--kb", kb_path, "Knowledge base file")->required();
  app.add_option("--text", text_path, "Annotated discourse file")->required();
  app.add_option("--max-depth", max_depth, "Longest role chain considered")
      ->check(CLI::PositiveNumber);
  app.add_flag("--transcript", transcript, "Print knowledge-base transcripts");
  app.add_flag("--summary", summary,
               "Print the resolution summary (default unless --transcript)");
  app.add_flag("--lint", lint, "Print knowledge-engineering reports first");
  app.add_option("--lint-threshold", lint_threshold,
                 "Allowed spread of decomposition depths per category")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--log", log, "Print the message log");
  CLI11_PARSE(app, argc, argv);

  std::ostringstream out;
  try {
    ellipsis::Kb kb = ellipsis::LoadKb(ellipsis::ReadFile(kb_path));
    ellipsis::DiscourseDocument doc =
        ellipsis::LoadDiscourse(ellipsis::ReadFile(text_path), kb);

    if (lint) {
      out << ellipsis::FormatReport(ellipsis::LintBasicCategories(kb));
      out << ellipsis::FormatReport(
          ellipsis::LintBalancedDeepening(kb, lint_threshold));
    }

    ellipsis::ProtocolConfig config;
    config.max_depth = max_depth;
    ellipsis::DiscourseResult result = ellipsis::RunDiscourse(kb, doc, config);

    if (transcript) {
      for (const auto &episode : result.episodes) {
        out << ellipsis::EmitTranscript(episode);
      }
    }
    if (log) {
      for (const auto &entry : result.log) {
        out << ellipsis::FormatLogEntry(entry) << "\n";
      }
    }
    if (summary || !transcript) WriteSummary(result, out);
  } catch (const ellipsis::Error &e) {
    std::cerr << "ellipsis: " << e.what() << "\n";
    return 1;
  }
  std::cout << out.str();
  return 0;
}
