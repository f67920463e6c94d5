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

// Word-actor message protocol for text ellipsis.
//
// Every phrase is a word actor and every utterance has a sentence delimiter
// actor holding the utterance's forward-looking centers. Actors share no
// state and talk only through messages, which a single FIFO queue delivers
// one at a time:
//
//   word --SearchNomAntecedent--> previous delimiter
//        nominal anaphora test fails:
//   word --SearchTextEllipsisAntecedent[1]--> previous delimiter
//        the delimiter switches the search to phase 2:
//   word --SearchTextEllipsisAntecedent[2]--> previous delimiter
//        the preferred bridge over the delimiter's centers succeeds:
//   antecedent --TextEllipsisAntecedentFound--> word
//        the word asserts the bridge into the discourse store.

#ifndef ELLIPSIS_PROTOCOL_H_
#define ELLIPSIS_PROTOCOL_H_

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ellipsis/centering.h"
#include "ellipsis/discourse.h"
#include "ellipsis/kb.h"
#include "ellipsis/resolver.h"

namespace ellipsis {

enum class ActorKind { kWordActor, kSentenceDelimiter };

struct ActorRef {
  std::string id;
  ActorKind kind = ActorKind::kWordActor;
  // Named references to other actors: "delimiter" for a word actor,
  // "previous" for a delimiter that has a predecessor.
  std::map<std::string, std::string> acquaintances;
};

enum class MessageType {
  kSearchNomAntecedent,
  kSearchTextEllipsisAntecedent,
  kTextEllipsisAntecedentFound,
};

struct Message {
  MessageType type = MessageType::kSearchNomAntecedent;
  // 1 or 2 for kSearchTextEllipsisAntecedent, 0 otherwise.
  int phase = 0;
  std::string initiator;
  std::string recipient;
  // Carried by kTextEllipsisAntecedentFound.
  std::optional<Resolution> resolution;
};

struct LoggedMessage {
  int seq = 0;
  Message message;
};

// "<seq> <variant>[<phase>] <initiator> -> <recipient>"; the bracketed phase
// appears only on search messages.
std::string FormatLogEntry(const LoggedMessage &entry);

struct ProtocolConfig {
  int max_depth = kDefaultMaxDepth;
};

// A definite noun for which no search was started.
struct SuppressedTarget {
  Phrase target;
  std::string reason;
};

struct DiscourseResult {
  std::vector<Resolution> resolutions;
  // Every preferred-bridge evaluation, in order.
  std::vector<BridgeEpisode> episodes;
  // Targets whose evaluation found no finite bridge.
  std::vector<Phrase> unresolved;
  std::vector<SuppressedTarget> suppressed;
  std::vector<LoggedMessage> log;
  AssertionStore store;
};

class Engine {
 public:
  explicit Engine(const Kb &kb, ProtocolConfig config = {});

  // Creates the utterance's delimiter (holding cf) and its word actors.
  // Utterances must be added in order.
  void AddUtterance(const Utterance &utterance, CenterState cf);

  // Records a link found by sentence-level semantic interpretation.
  void AssertSentenceLink(const BridgeLink &link);

  static std::string WordActorId(const Phrase &phrase);
  static std::string DelimiterId(int utterance);

  const ActorRef &Actor(const std::string &id) const;
  bool HasActor(const std::string &id) const;

  // Starts a resolution episode for a definite noun: posts
  // SearchNomAntecedent unless the phrase is already attached or has no
  // preceding utterance. Returns whether a message was posted.
  bool Start(const Phrase &target);

  void Post(Message message);

  // Delivers one message and returns the messages it causes, without
  // queueing or logging them.
  std::vector<Message> Dispatch(const Message &message);

  // Delivers queued messages in FIFO order until the queue is empty.
  void Run();

  DiscourseResult &result() { return result_; }
  const DiscourseResult &result() const { return result_; }

 private:
  struct ActorState {
    ActorRef ref;
    std::optional<Phrase> phrase;
    std::optional<CenterState> cf;
    std::optional<Utterance> utterance;
  };

  ActorState &State(const std::string &id);
  const std::string *PreviousDelimiter(const Phrase &phrase) const;

  const Kb &kb_;
  ProtocolConfig config_;
  std::map<std::string, ActorState> actors_;
  std::deque<Message> queue_;
  int next_seq_ = 1;
  DiscourseResult result_;
};

// Ranks every utterance, replays the protocol for each definite noun in
// surface order, one episode at a time, and returns everything produced.
DiscourseResult RunDiscourse(const Kb &kb, const DiscourseDocument &doc,
                             ProtocolConfig config = {});

}  // namespace ellipsis

#endif  // ELLIPSIS_PROTOCOL_H_
