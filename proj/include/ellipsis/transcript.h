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

// Knowledge-base transcripts of bridge searches:
//
//   (preferred-cb (LCD-DISPLAY-0008 COMPAQ LTE-LITE-25) CPU-0009)
//   LCD-DISPLAY-0008 - depth:1 NIL
//   ...
//   LTE-LITE-25 - depth:3 TRUE
//   ==> (LTE-LITE-25 (COMPOSE HAS-CENTRAL-UNIT HAS-MOTHERBOARD HAS-CPU) CPU-0009)
//
// All names are uppercased. The final line is present only on success.

#ifndef ELLIPSIS_TRANSCRIPT_H_
#define ELLIPSIS_TRANSCRIPT_H_

#include <string>

#include "ellipsis/resolver.h"

namespace ellipsis {

std::string EmitTranscript(const BridgeEpisode &episode);

// "(WINNER ROLE TARGET)" or "(WINNER (COMPOSE ROLE ...) TARGET)".
std::string FormatBridge(const Resolution &resolution);

}  // namespace ellipsis

#endif  // ELLIPSIS_TRANSCRIPT_H_
