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

#include "ellipsis/protocol.h"

#include <sstream>

#include "ellipsis/error.h"

namespace ellipsis {

namespace {

const char *TypeName(MessageType type) {
  switch (type) {
    case MessageType::kSearchNomAntecedent:
      return "SearchNomAntecedent";
    case MessageType::kSearchTextEllipsisAntecedent:
      return "SearchTextEllipsisAntecedent";
    case MessageType::kTextEllipsisAntecedentFound:
      return "TextEllipsisAntecedentFound";
  }
  return "?";
}

}  // namespace

std::string FormatLogEntry(const LoggedMessage &entry) {
  const Message &m = entry.message;
  std::ostringstream out;
  out << entry.seq << " " << TypeName(m.type);
  if (m.type == MessageType::kSearchTextEllipsisAntecedent) {
    out << "[" << m.phase << "]";
  }
  out << " " << m.initiator << " -> " << m.recipient;
  return out.str();
}

Engine::Engine(const Kb &kb, ProtocolConfig config)
    : kb_(kb), config_(config) {}

std::string Engine::WordActorId(const Phrase &phrase) {
  return "w" + std::to_string(phrase.utterance) + "." + phrase.id;
}

std::string Engine::DelimiterId(int utterance) {
  return "s" + std::to_string(utterance);
}

void Engine::AddUtterance(const Utterance &utterance, CenterState cf) {
  const std::string delimiter = DelimiterId(utterance.index);
  if (actors_.count(delimiter) > 0) {
    throw Error(ErrorCode::kProtocol,
                "utterance " + std::to_string(utterance.index) + " added twice");
  }
  ActorState state;
  state.ref = {delimiter, ActorKind::kSentenceDelimiter, {}};
  const std::string previous = DelimiterId(utterance.index - 1);
  if (actors_.count(previous) > 0) {
    state.ref.acquaintances["previous"] = previous;
  }
  state.cf = std::move(cf);
  state.utterance = utterance;
  actors_[delimiter] = std::move(state);

  for (const auto &phrase : utterance.phrases) {
    ActorState word;
    word.ref = {WordActorId(phrase), ActorKind::kWordActor,
                {{"delimiter", delimiter}}};
    word.phrase = phrase;
    actors_[word.ref.id] = std::move(word);
  }
}

void Engine::AssertSentenceLink(const BridgeLink &link) {
  result_.store.Assert(link);
}

const ActorRef &Engine::Actor(const std::string &id) const {
  auto it = actors_.find(id);
  if (it == actors_.end()) {
    throw Error(ErrorCode::kUnknownActor, "no actor '" + id + "'");
  }
  return it->second.ref;
}

bool Engine::HasActor(const std::string &id) const {
  return actors_.count(id) > 0;
}

Engine::ActorState &Engine::State(const std::string &id) {
  auto it = actors_.find(id);
  if (it == actors_.end()) {
    throw Error(ErrorCode::kUnknownActor, "no actor '" + id + "'");
  }
  return it->second;
}

const std::string *Engine::PreviousDelimiter(const Phrase &phrase) const {
  const ActorRef &word = Actor(WordActorId(phrase));
  const ActorRef &delimiter = Actor(word.acquaintances.at("delimiter"));
  auto it = delimiter.acquaintances.find("previous");
  return it == delimiter.acquaintances.end() ? nullptr : &it->second;
}

bool Engine::Start(const Phrase &target) {
  if (!target.binding) {
    result_.suppressed.push_back({target, "unbound"});
    return false;
  }
  const std::string *previous = PreviousDelimiter(target);
  if (previous == nullptr) {
    result_.suppressed.push_back({target, "no preceding utterance"});
    return false;
  }
  const ActorState &own = State(Actor(WordActorId(target)).acquaintances.at(
      "delimiter"));
  if (IsPartonomicallyAttached(kb_, target, *own.utterance, result_.store)) {
    result_.suppressed.push_back({target, "attached by semantic interpretation"});
    return false;
  }
  Post({MessageType::kSearchNomAntecedent, 0, WordActorId(target), *previous,
        std::nullopt});
  return true;
}

void Engine::Post(Message message) { queue_.push_back(std::move(message)); }

std::vector<Message> Engine::Dispatch(const Message &message) {
  ActorState &recipient = State(message.recipient);
  ActorState &initiator = State(message.initiator);
  std::vector<Message> emitted;
  const bool at_delimiter =
      recipient.ref.kind == ActorKind::kSentenceDelimiter;

  switch (message.type) {
    case MessageType::kSearchNomAntecedent: {
      if (!at_delimiter || !initiator.phrase) {
        throw Error(ErrorCode::kProtocol,
                    "SearchNomAntecedent must go from a word actor to a "
                    "delimiter");
      }
      if (NominalAnaphoraGate(kb_, *initiator.phrase, *recipient.cf)) {
        result_.suppressed.push_back({*initiator.phrase, "nominal anaphor"});
        break;
      }
      emitted.push_back({MessageType::kSearchTextEllipsisAntecedent, 1,
                         message.initiator, message.recipient, std::nullopt});
      break;
    }
    case MessageType::kSearchTextEllipsisAntecedent: {
      if (!at_delimiter) {
        throw Error(ErrorCode::kProtocol,
                    "phase " + std::to_string(message.phase) +
                        " search arrived at non-delimiter '" +
                        message.recipient + "'");
      }
      if (!initiator.phrase) {
        throw Error(ErrorCode::kProtocol, "search initiated by a delimiter");
      }
      if (message.phase == 1) {
        emitted.push_back({MessageType::kSearchTextEllipsisAntecedent, 2,
                           message.initiator, message.recipient,
                           std::nullopt});
        break;
      }
      if (message.phase != 2) {
        throw Error(ErrorCode::kProtocol,
                    "invalid search phase " + std::to_string(message.phase));
      }
      BridgeEpisode episode = EvaluateBridge(kb_, *initiator.phrase,
                                             *recipient.cf, config_.max_depth);
      if (episode.resolution) {
        emitted.push_back({MessageType::kTextEllipsisAntecedentFound, 0,
                           WordActorId(episode.resolution->antecedent),
                           message.initiator, episode.resolution});
      } else {
        result_.unresolved.push_back(*initiator.phrase);
      }
      result_.episodes.push_back(std::move(episode));
      break;
    }
    case MessageType::kTextEllipsisAntecedentFound: {
      if (at_delimiter || !message.resolution) {
        throw Error(ErrorCode::kProtocol,
                    "TextEllipsisAntecedentFound must carry a resolution to a "
                    "word actor");
      }
      AssertBridge(result_.store, *message.resolution);
      result_.resolutions.push_back(*message.resolution);
      break;
    }
  }
  return emitted;
}

void Engine::Run() {
  while (!queue_.empty()) {
    Message message = std::move(queue_.front());
    queue_.pop_front();
    result_.log.push_back({next_seq_++, message});
    for (auto &next : Dispatch(message)) Post(std::move(next));
  }
}

DiscourseResult RunDiscourse(const Kb &kb, const DiscourseDocument &doc,
                             ProtocolConfig config) {
  Engine engine(kb, config);
  for (const auto &utterance : doc.utterances) {
    engine.AddUtterance(utterance, RankCf(utterance));
    for (const auto &[index, link] : doc.links) {
      if (index == utterance.index) engine.AssertSentenceLink(link);
    }
    for (const auto &phrase : utterance.phrases) {
      if (!IsaClass(phrase.word_class, WordClass::kNoun) ||
          !phrase.has_definite_det) {
        continue;
      }
      if (engine.Start(phrase)) engine.Run();
    }
  }
  return std::move(engine.result());
}

}  // namespace ellipsis
