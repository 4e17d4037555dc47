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

#ifndef FACTBENCH_CORE_MODEL_H_
#define FACTBENCH_CORE_MODEL_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace factbench {

// Coarse part-of-speech set. Fine-grained tagger output is mapped down to
// these five values by the tagger.
enum class Pos { kVerb, kNoun, kAdj, kDet, kOther };
enum class Ner { kPerson, kOrg, kLoc, kMisc, kNone };
enum class Highlight { kVerb, kNamedEntity, kNone };

std::string_view PosName(Pos pos);
std::string_view NerName(Ner ner);
std::string_view HighlightName(Highlight h);
std::optional<Pos> ParsePos(std::string_view name);
std::optional<Ner> ParseNer(std::string_view name);
std::optional<Highlight> ParseHighlight(std::string_view name);

struct Token {
  int index = 0;
  std::string text;
  Pos pos = Pos::kOther;
  Ner ner = Ner::kNone;
  Highlight highlight = Highlight::kNone;

  bool operator==(const Token&) const = default;
};

struct TaggedSentence {
  std::string id;
  std::string raw;
  std::vector<Token> tokens;
  std::string language = "en";

  bool operator==(const TaggedSentence&) const = default;
};

struct SlotToken {
  int token_index = 0;
  bool optional = false;

  bool operator==(const SlotToken&) const = default;
};

// One way of filling a slot: token references in sentence order.
using Alternative = std::vector<SlotToken>;

struct SlotTemplate {
  std::vector<Alternative> alternatives;

  bool operator==(const SlotTemplate&) const = default;
};

struct TripleTemplate {
  SlotTemplate subject;
  SlotTemplate predicate;
  SlotTemplate object;

  bool operator==(const TripleTemplate&) const = default;
};

struct FactSynset {
  std::string id;
  std::vector<TripleTemplate> triples;

  bool operator==(const FactSynset&) const = default;
};

struct GoldBenchmark {
  std::vector<TaggedSentence> sentences;
  // Sentence id -> synsets in annotation order. Sentences without
  // synsets may be absent.
  std::map<std::string, std::vector<FactSynset>> synsets;

  bool operator==(const GoldBenchmark&) const = default;

  // nullptr when the id is unknown.
  const TaggedSentence* FindSentence(std::string_view id) const;
  std::size_t SynsetCount() const;
};

using Words = std::vector<std::string>;

struct ConcreteTriple {
  Words subject;
  Words predicate;
  Words object;

  bool operator==(const ConcreteTriple&) const = default;
  auto operator<=>(const ConcreteTriple&) const = default;
};

struct SystemExtraction {
  std::string sentence_id;
  std::string subject;
  std::string predicate;
  std::string object;
  std::optional<double> confidence;

  bool operator==(const SystemExtraction&) const = default;
};

struct NormalizationConfig {
  bool case_fold = true;
  bool strip_terminal_punct = false;
};

// True for ASCII whitespace and every other ASCII control character.
bool IsSeparatorChar(char c);

// Splits on separator characters; never yields empty pieces.
Words SplitWords(std::string_view text);

// Joins with single spaces.
std::string JoinWords(const Words& words);

// Case-folds per cfg and optionally drops a final single-character
// punctuation token (only when something else remains).
Words NormalizeSlot(const Words& words, const NormalizationConfig& cfg);

// Normalized form of a single word (case folding only).
std::string NormalizeWord(std::string_view word,
                          const NormalizationConfig& cfg);

// Canonical key of a triple. Words are separated by 0x1F and slots by 0x1E;
// neither can occur in token text.
std::string TripleKey(const ConcreteTriple& t, const NormalizationConfig& cfg);

// Turns a system extraction into a triple by whitespace splitting. The
// result may have empty slots when the extraction is invalid.
ConcreteTriple ToConcrete(const SystemExtraction& e);

// Invariant checks. Each throws factbench::Error describing the first
// violation found.
void ValidateSentence(const TaggedSentence& s);
void ValidateSlot(const SlotTemplate& slot, const TaggedSentence& s);
void ValidateTriple(const TripleTemplate& t, const TaggedSentence& s);
void ValidateSynset(const FactSynset& f, const TaggedSentence& s);
void ValidateBenchmark(const GoldBenchmark& g);
void ValidateExtraction(const SystemExtraction& e);

// Non-whitespace content of `text`, used for the raw/token consistency
// invariant.
std::string StripWhitespace(std::string_view text);

}  // namespace factbench

#endif  // FACTBENCH_CORE_MODEL_H_
