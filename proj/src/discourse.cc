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

#include "ellipsis/discourse.h"

#include <map>
#include <set>
#include <sstream>

#include "ellipsis/error.h"
#include "ellipsis/text.h"

namespace ellipsis {

namespace {

// Drops a '#' comment that is not inside a quoted surface.
std::string_view StripDiscourseComment(std::string_view line) {
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted && c == '\\') {
      ++i;
    } else if (c == '"') {
      quoted = !quoted;
    } else if (c == '#' && !quoted) {
      return line.substr(0, i);
    }
  }
  return line;
}

std::string EscapeSurface(std::string_view surface) {
  std::string out;
  for (char c : surface) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

class PhraseLineParser {
 public:
  PhraseLineParser(std::string_view rest, int line) : rest_(rest), line_(line) {}

  Phrase Parse() {
    Phrase phrase;
    std::vector<std::string> head = Tokenize(rest_.substr(0, rest_.find('"')));
    if (head.size() != 1) Fail("expected: phrase <id> \"<surface>\" ...");
    phrase.id = head[0];
    size_t open = rest_.find('"');
    if (open == std::string_view::npos) Fail("missing quoted surface");
    size_t i = open + 1;
    bool closed = false;
    for (; i < rest_.size(); ++i) {
      char c = rest_[i];
      if (c == '\\' && i + 1 < rest_.size()) {
        phrase.surface += rest_[++i];
      } else if (c == '"') {
        closed = true;
        break;
      } else {
        phrase.surface += c;
      }
    }
    if (!closed) Fail("unterminated surface string");

    bool have_class = false;
    bool have_func = false;
    std::set<std::string> seen;
    for (const std::string &token : Tokenize(rest_.substr(i + 1))) {
      size_t eq = token.find('=');
      if (eq == std::string::npos) Fail("expected key=value, got '" + token + "'");
      std::string key = token.substr(0, eq);
      std::string value = token.substr(eq + 1);
      if (!seen.insert(key).second) Fail("repeated attribute '" + key + "'");
      if (value.empty()) Fail("empty value for '" + key + "'");
      if (key == "class") {
        auto word_class = ParseWordClass(value);
        if (!word_class) Fail("unknown word class '" + value + "'");
        phrase.word_class = *word_class;
        have_class = true;
      } else if (key == "head") {
        phrase.head = value;
      } else if (key == "det") {
        if (value != "definite") Fail("det only accepts 'definite'");
        phrase.has_definite_det = true;
      } else if (key == "bind") {
        phrase.binding = value;
      } else if (key == "func") {
        auto category = ParseCategory(value);
        if (!category) Fail("unknown functional category '" + value + "'");
        phrase.category = *category;
        have_func = true;
      } else {
        Fail("unknown attribute '" + key + "'");
      }
    }
    if (!have_class) Fail("phrase needs class=");
    if (!have_func) Fail("phrase needs func=");
    return phrase;
  }

 private:
  [[noreturn]] void Fail(const std::string &message) {
    throw Error(ErrorCode::kParse, message, line_);
  }

  std::string_view rest_;
  int line_;
};

// Head links must stay inside the utterance and form a forest. Definite
// determiners attached as dependents mark their head as definite.
void FinishUtterance(Utterance &utterance, const std::map<std::string, int> &lines) {
  auto coordinates = [&](const Phrase &p) {
    return "utterance " + std::to_string(utterance.index) + " phrase '" +
           p.id + "'";
  };
  for (const auto &phrase : utterance.phrases) {
    if (phrase.head && utterance.Find(*phrase.head) == nullptr) {
      throw Error(ErrorCode::kAnnotation,
                  coordinates(phrase) + ": head '" + *phrase.head +
                      "' is not a phrase of the utterance",
                  lines.at(phrase.id));
    }
  }
  for (const auto &phrase : utterance.phrases) {
    const Phrase *current = &phrase;
    for (size_t steps = 0; current->head; ++steps) {
      if (steps >= utterance.phrases.size()) {
        throw Error(ErrorCode::kAnnotation,
                    coordinates(phrase) + ": head links form a cycle",
                    lines.at(phrase.id));
      }
      current = utterance.Find(*current->head);
    }
  }
  for (const auto &dependent : utterance.phrases) {
    if (!dependent.head ||
        !IsaClass(dependent.word_class, WordClass::kDetDefinite)) {
      continue;
    }
    for (auto &phrase : utterance.phrases) {
      if (phrase.id == *dependent.head) phrase.has_definite_det = true;
    }
  }
}

}  // namespace

DiscourseDocument ParseDiscourse(std::string_view source) {
  DiscourseDocument doc;
  std::map<std::string, int> phrase_lines;
  int line_number = 0;
  auto fail = [&](const std::string &message) {
    throw Error(ErrorCode::kParse, message, line_number);
  };

  for (std::string_view raw : SplitLines(source)) {
    ++line_number;
    std::string_view line = StripDiscourseComment(raw);
    std::vector<std::string> tokens = Tokenize(line);
    if (tokens.empty()) continue;
    const std::string &keyword = tokens[0];

    if (keyword == "utterance") {
      if (tokens.size() != 2) fail("expected: utterance <n>");
      int expected = static_cast<int>(doc.utterances.size()) + 1;
      if (tokens[1] != std::to_string(expected)) {
        fail("utterance indices must run 1, 2, ...; expected " +
             std::to_string(expected) + ", got " + tokens[1]);
      }
      if (!doc.utterances.empty()) {
        FinishUtterance(doc.utterances.back(), phrase_lines);
      }
      phrase_lines.clear();
      doc.utterances.push_back(Utterance{expected, {}});
    } else if (keyword == "phrase") {
      if (doc.utterances.empty()) fail("phrase outside an utterance");
      Utterance &utterance = doc.utterances.back();
      size_t start = line.find("phrase") + 6;
      Phrase phrase = PhraseLineParser(line.substr(start), line_number).Parse();
      if (utterance.Find(phrase.id) != nullptr) {
        fail("duplicate phrase id '" + phrase.id + "'");
      }
      phrase.utterance = utterance.index;
      phrase.position = static_cast<int>(utterance.phrases.size()) + 1;
      phrase_lines[phrase.id] = line_number;
      utterance.phrases.push_back(std::move(phrase));
    } else if (keyword == "link") {
      if (doc.utterances.empty()) fail("link outside an utterance");
      if (tokens.size() != 4) fail("expected: link <FROM> <role>[,<role>...] <TO>");
      BridgeLink link;
      link.from = tokens[1];
      link.to = tokens[3];
      std::stringstream roles(tokens[2]);
      for (std::string role; std::getline(roles, role, ',');) {
        if (role.empty()) fail("empty role in link");
        link.roles.push_back(role);
      }
      doc.links.push_back({doc.utterances.back().index, std::move(link)});
    } else {
      fail("unknown declaration '" + keyword + "'");
    }
  }
  if (!doc.utterances.empty()) {
    FinishUtterance(doc.utterances.back(), phrase_lines);
  }
  return doc;
}

void ValidateDiscourse(const DiscourseDocument &doc, const Kb &kb) {
  auto known = [&](const std::string &name) {
    return kb.HasInstance(name) || kb.HasConcept(name);
  };
  for (const auto &utterance : doc.utterances) {
    for (const auto &phrase : utterance.phrases) {
      if (phrase.binding && !known(*phrase.binding)) {
        throw Error(ErrorCode::kAnnotation,
                    "utterance " + std::to_string(utterance.index) +
                        " phrase '" + phrase.id + "': binding '" +
                        *phrase.binding + "' names no KB instance or concept");
      }
    }
  }
  for (const auto &[index, link] : doc.links) {
    std::string where = "utterance " + std::to_string(index) + " link: ";
    for (const auto *end : {&link.from, &link.to}) {
      if (!known(*end)) {
        throw Error(ErrorCode::kAnnotation,
                    where + "'" + *end + "' names no KB instance or concept");
      }
    }
    for (const auto &role : link.roles) {
      if (!kb.HasRole(role)) {
        throw Error(ErrorCode::kAnnotation, where + "unknown role '" + role + "'");
      }
    }
  }
}

DiscourseDocument LoadDiscourse(std::string_view source, const Kb &kb) {
  DiscourseDocument doc = ParseDiscourse(source);
  ValidateDiscourse(doc, kb);
  return doc;
}

std::string SerializeDiscourse(const DiscourseDocument &doc) {
  std::ostringstream out;
  for (const auto &utterance : doc.utterances) {
    out << "utterance " << utterance.index << "\n";
    for (const auto &p : utterance.phrases) {
      out << "phrase " << p.id << " \"" << EscapeSurface(p.surface) << "\""
          << " class=" << WordClassName(p.word_class);
      if (p.head) out << " head=" << *p.head;
      if (p.has_definite_det) out << " det=definite";
      if (p.binding) out << " bind=" << *p.binding;
      out << " func=" << FormatCategory(p.category) << "\n";
    }
    for (const auto &[index, link] : doc.links) {
      if (index != utterance.index) continue;
      out << "link " << link.from << " ";
      for (size_t i = 0; i < link.roles.size(); ++i) {
        out << (i ? "," : "") << link.roles[i];
      }
      out << " " << link.to << "\n";
    }
  }
  return out.str();
}

}  // namespace ellipsis
