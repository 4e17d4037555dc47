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

#ifndef FACTBENCH_TAGGER_H_
#define FACTBENCH_TAGGER_H_

#include <set>
#include <string>
#include <string_view>

#include "factbench/core_model.h"

namespace factbench {

enum class NerMode { kCapitalizationHeuristic, kPretaggedOnly };
enum class HighlightScheme { kFull, kVerbs, kNamedEntities, kNone };

std::string_view HighlightSchemeName(HighlightScheme s);
std::optional<HighlightScheme> ParseHighlightScheme(std::string_view name);
std::string_view NerModeName(NerMode m);
std::optional<NerMode> ParseNerMode(std::string_view name);

struct TaggerConfig {
  std::set<std::string> verb_lexicon;  // lowercase surface forms
  NerMode ner_mode = NerMode::kCapitalizationHeuristic;
  HighlightScheme highlight_scheme = HighlightScheme::kFull;
  std::string language = "en";
};

// Small built-in list of English auxiliaries and frequent verbs.
const std::set<std::string>& DefaultVerbLexicon();
TaggerConfig DefaultTaggerConfig();

// Lexicon file: one lowercase word per line, UTF-8. Blank lines and lines
// starting with '#' are skipped. Entries are lowercased.
std::set<std::string> ParseLexicon(std::string_view bytes);

// Reads a JSON tagger config:
//   {"verb_lexicon": [...] | "verb_lexicon_path": "...",
//    "ner_mode": "CAPITALIZATION_HEURISTIC" | "PRETAGGED_ONLY",
//    "highlight_scheme": "FULL" | "VERBS" | "NAMED_ENTITIES" | "NONE",
//    "language": "en"}
// Relative lexicon paths resolve against the config file's directory.
TaggerConfig LoadTaggerConfig(const std::string& path);

// Whitespace tokenization; a trailing . , ! ? ; or : on the last word is
// split off. No segmentation is attempted for scripts without spaces, so
// such text must arrive pre-tokenized.
Words Tokenize(std::string_view text, std::string_view language = "en");

Highlight HighlightFor(Pos pos, Ner ner, HighlightScheme scheme);

TaggedSentence Tag(std::string_view text, std::string id,
                   const TaggerConfig& cfg);

// Maps external tag sets onto the coarse enums: POS by first letter
// (V, N, J/A, D), NER by name with optional B-/I-/E-/S- prefix.
Pos MapPosLabel(std::string_view label);
Ner MapNerLabel(std::string_view label);

// Accepts {"id", "raw", "language"?, "tokens": [{"text", "pos", "ner"}]}.
TaggedSentence IngestPretagged(std::string_view json_bytes,
                               const TaggerConfig& cfg);

}  // namespace factbench

#endif  // FACTBENCH_TAGGER_H_
