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

#include "ellipsis/transcript.h"

#include <sstream>

#include "ellipsis/text.h"

namespace ellipsis {

std::string FormatBridge(const Resolution &resolution) {
  std::ostringstream out;
  out << "(" << ToUpper(BindingOf(resolution.antecedent)) << " ";
  const auto &steps = resolution.chain.steps;
  if (steps.size() == 1) {
    out << ToUpper(steps[0].role);
  } else {
    out << "(COMPOSE";
    for (const auto &step : steps) out << " " << ToUpper(step.role);
    out << ")";
  }
  out << " " << ToUpper(BindingOf(resolution.target)) << ")";
  return out.str();
}

std::string EmitTranscript(const BridgeEpisode &episode) {
  std::ostringstream out;
  out << "(preferred-cb (";
  for (size_t i = 0; i < episode.candidates.size(); ++i) {
    out << (i ? " " : "") << ToUpper(BindingOf(episode.candidates[i]));
  }
  out << ") " << ToUpper(BindingOf(episode.target)) << ")\n";
  for (const auto &probe : episode.trace) {
    out << ToUpper(probe.candidate) << " - depth:" << probe.depth << " "
        << (probe.hit ? "TRUE" : "NIL") << "\n";
  }
  if (episode.resolution) {
    out << "==> " << FormatBridge(*episode.resolution) << "\n";
  }
  return out.str();
}

}  // namespace ellipsis
