// Copyright 2026 The factbench Authors.
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

#include "factbench/tagger.h"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "factbench/error.h"
#include "json.hpp"

namespace factbench {

using json = nlohmann::json;

std::string_view HighlightSchemeName(HighlightScheme s) {
  switch (s) {
    case HighlightScheme::kFull: return "FULL";
    case HighlightScheme::kVerbs: return "VERBS";
    case HighlightScheme::kNamedEntities: return "NAMED_ENTITIES";
    case HighlightScheme::kNone: return "NONE";
  }
  return "FULL";
}

std::optional<HighlightScheme> ParseHighlightScheme(std::string_view name) {
  for (auto s : {HighlightScheme::kFull, HighlightScheme::kVerbs,
                 HighlightScheme::kNamedEntities, HighlightScheme::kNone}) {
    if (HighlightSchemeName(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view NerModeName(NerMode m) {
  return m == NerMode::kPretaggedOnly ? "PRETAGGED_ONLY"
                                      : "CAPITALIZATION_HEURISTIC";
}

std::optional<NerMode> ParseNerMode(std::string_view name) {
  for (auto m : {NerMode::kCapitalizationHeuristic, NerMode::kPretaggedOnly}) {
    if (NerModeName(m) == name) return m;
  }
  return std::nullopt;
}

const std::set<std::string>& DefaultVerbLexicon() {
  static const std::set<std::string> kVerbs = {
      "am",     "are",    "is",      "was",     "were",     "be",
      "been",   "being",  "has",     "have",    "had",      "having",
      "do",     "does",   "did",     "can",     "could",    "will",
      "would",  "shall",  "should",  "may",     "might",    "must",
      "born",   "became", "become",  "block",   "called",   "died",
      "founded", "get",   "got",     "give",    "gave",     "go",
      "went",   "know",   "knew",    "lives",   "live",     "lived",
      "made",   "make",   "married", "play",    "played",   "reside",
      "resides", "said",  "say",     "says",    "see",      "saw",
      "take",   "took",   "told",    "used",     "use",
      "won",    "win",    "works",   "work",    "worked",   "wrote",
      "write",  "located", "joined", "leads",   "led",      "owns",
      "acquired", "released", "continues", "continued", "received",
  };
  return kVerbs;
}

TaggerConfig DefaultTaggerConfig() {
  TaggerConfig cfg;
  cfg.verb_lexicon = DefaultVerbLexicon();
  return cfg;
}

namespace {

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kMalformedInput, "cannot read " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::set<std::string> ParseLexicon(std::string_view bytes) {
  std::set<std::string> out;
  std::istringstream in{std::string(bytes)};
  std::string line;
  while (std::getline(in, line)) {
    Words w = SplitWords(line);
    if (w.empty() || w[0][0] == '#') continue;
    out.insert(Lower(w[0]));
  }
  return out;
}

TaggerConfig LoadTaggerConfig(const std::string& path) {
  json j;
  try {
    j = json::parse(ReadFile(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kSchemaViolation, e.what(), path);
  }
  TaggerConfig cfg = DefaultTaggerConfig();
  if (!j.is_object()) {
    throw Error(ErrorCode::kSchemaViolation, "tagger config must be an object",
                path + ":/");
  }
  if (j.contains("verb_lexicon")) {
    cfg.verb_lexicon.clear();
    for (const auto& w : j.at("verb_lexicon")) {
      if (!w.is_string() || w.get<std::string>().empty()) {
        throw Error(ErrorCode::kSchemaViolation, "lexicon entry must be a word",
                    path + ":/verb_lexicon");
      }
      cfg.verb_lexicon.insert(Lower(w.get<std::string>()));
    }
  } else if (j.contains("verb_lexicon_path")) {
    std::filesystem::path lex = j.at("verb_lexicon_path").get<std::string>();
    if (lex.is_relative()) {
      lex = std::filesystem::path(path).parent_path() / lex;
    }
    cfg.verb_lexicon = ParseLexicon(ReadFile(lex));
  }
  if (j.contains("ner_mode")) {
    auto m = ParseNerMode(j.at("ner_mode").get<std::string>());
    if (!m) {
      throw Error(ErrorCode::kSchemaViolation, "unknown ner_mode",
                  path + ":/ner_mode");
    }
    cfg.ner_mode = *m;
  }
  if (j.contains("highlight_scheme")) {
    auto s = ParseHighlightScheme(j.at("highlight_scheme").get<std::string>());
    if (!s) {
      throw Error(ErrorCode::kSchemaViolation, "unknown highlight_scheme",
                  path + ":/highlight_scheme");
    }
    cfg.highlight_scheme = *s;
  }
  if (j.contains("language")) cfg.language = j.at("language").get<std::string>();
  return cfg;
}

Words Tokenize(std::string_view text, std::string_view /*language*/) {
  Words words = SplitWords(text);
  if (words.empty()) {
    throw Error(ErrorCode::kEmptyText, "sentence text is empty");
  }
  std::string& last = words.back();
  constexpr std::string_view kTerminal = ".,!?;:";
  if (last.size() > 1 && kTerminal.find(last.back()) != std::string_view::npos) {
    std::string punct(1, last.back());
    last.pop_back();
    words.push_back(std::move(punct));
  }
  return words;
}

Highlight HighlightFor(Pos pos, Ner ner, HighlightScheme scheme) {
  const bool show_ne = scheme == HighlightScheme::kFull ||
                       scheme == HighlightScheme::kNamedEntities;
  const bool show_verb =
      scheme == HighlightScheme::kFull || scheme == HighlightScheme::kVerbs;
  if (show_ne && ner != Ner::kNone) return Highlight::kNamedEntity;
  if (show_verb && pos == Pos::kVerb) return Highlight::kVerb;
  return Highlight::kNone;
}

namespace {

bool IsCapitalized(const std::string& w) {
  return !w.empty() && w[0] >= 'A' && w[0] <= 'Z';
}

bool IsDeterminer(const std::string& lower) {
  return lower == "a" || lower == "an" || lower == "the" || lower == "this" ||
         lower == "that" || lower == "these" || lower == "those";
}

}  // namespace

TaggedSentence Tag(std::string_view text, std::string id,
                   const TaggerConfig& cfg) {
  TaggedSentence s;
  s.id = std::move(id);
  s.raw = std::string(text);
  s.language = cfg.language;
  Words words = Tokenize(text, cfg.language);
  for (std::size_t i = 0; i < words.size(); ++i) {
    Token t;
    t.index = static_cast<int>(i);
    t.text = std::move(words[i]);
    std::string lower = Lower(t.text);
    if (cfg.verb_lexicon.count(lower)) {
      t.pos = Pos::kVerb;
    } else if (IsDeterminer(lower)) {
      t.pos = Pos::kDet;
    }
    s.tokens.push_back(std::move(t));
  }
  if (cfg.ner_mode == NerMode::kCapitalizationHeuristic) {
    // A capitalized run is a name unless it is only the sentence-initial
    // word. Lexicon verbs and determiners break runs.
    std::size_t i = 0;
    while (i < s.tokens.size()) {
      auto in_run = [&](std::size_t k) {
        return IsCapitalized(s.tokens[k].text) &&
               s.tokens[k].pos == Pos::kOther;
      };
      if (!in_run(i)) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < s.tokens.size() && in_run(j)) ++j;
      if (j - i > 1 || i > 0) {
        for (std::size_t k = i; k < j; ++k) {
          s.tokens[k].ner = Ner::kMisc;
          s.tokens[k].pos = Pos::kNoun;
        }
      }
      i = j;
    }
  }
  for (Token& t : s.tokens) {
    t.highlight = HighlightFor(t.pos, t.ner, cfg.highlight_scheme);
  }
  return s;
}

Pos MapPosLabel(std::string_view label) {
  if (label.empty()) return Pos::kOther;
  switch (std::toupper(static_cast<unsigned char>(label[0]))) {
    case 'V': return Pos::kVerb;
    case 'N': return Pos::kNoun;
    case 'J':
    case 'A': return Pos::kAdj;
    case 'D': return Pos::kDet;
    default: return Pos::kOther;
  }
}

Ner MapNerLabel(std::string_view label) {
  std::string l = Lower(label);
  if (l.size() > 2 && l[1] == '-' &&
      (l[0] == 'b' || l[0] == 'i' || l[0] == 'e' || l[0] == 's')) {
    l = l.substr(2);
  }
  if (l.empty() || l == "none" || l == "o") return Ner::kNone;
  if (l == "person" || l == "per") return Ner::kPerson;
  if (l == "org" || l == "organization") return Ner::kOrg;
  if (l == "loc" || l == "location" || l == "gpe") return Ner::kLoc;
  return Ner::kMisc;
}

TaggedSentence IngestPretagged(std::string_view json_bytes,
                               const TaggerConfig& cfg) {
  json j;
  try {
    j = json::parse(json_bytes);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kSchemaViolation, e.what(), "/");
  }
  auto require_string = [](const json& obj, const char* key,
                           const std::string& where) -> std::string {
    if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_string()) {
      throw Error(ErrorCode::kSchemaViolation,
                  std::string("missing string field '") + key + "'",
                  where + "/" + key);
    }
    return obj.at(key).get<std::string>();
  };
  TaggedSentence s;
  s.id = require_string(j, "id", "");
  s.raw = require_string(j, "raw", "");
  s.language = j.contains("language") && j.at("language").is_string()
                   ? j.at("language").get<std::string>()
                   : cfg.language;
  if (!j.contains("tokens") || !j.at("tokens").is_array()) {
    throw Error(ErrorCode::kSchemaViolation, "missing token array", "/tokens");
  }
  const json& tokens = j.at("tokens");
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string where = "/tokens/" + std::to_string(i);
    Token t;
    t.index = static_cast<int>(i);
    t.text = require_string(tokens[i], "text", where);
    if (t.text.empty()) {
      throw Error(ErrorCode::kSchemaViolation, "empty token", where + "/text");
    }
    for (char c : t.text) {
      if (IsSeparatorChar(c)) {
        throw Error(ErrorCode::kTokenizationMismatch,
                    "token contains whitespace", where + "/text");
      }
    }
    if (tokens[i].contains("pos")) {
      t.pos = MapPosLabel(require_string(tokens[i], "pos", where));
    }
    if (tokens[i].contains("ner")) {
      t.ner = MapNerLabel(require_string(tokens[i], "ner", where));
    }
    t.highlight = HighlightFor(t.pos, t.ner, cfg.highlight_scheme);
    s.tokens.push_back(std::move(t));
  }
  if (s.tokens.empty()) {
    throw Error(ErrorCode::kSchemaViolation, "token array is empty", "/tokens");
  }
  ValidateSentence(s);
  return s;
}

}  // namespace factbench
