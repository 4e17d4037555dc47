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

#include "factbench/core_model.h"

#include <cctype>
#include <string>

#include "factbench/error.h"

namespace factbench {

std::string_view PosName(Pos pos) {
  switch (pos) {
    case Pos::kVerb: return "VERB";
    case Pos::kNoun: return "NOUN";
    case Pos::kAdj: return "ADJ";
    case Pos::kDet: return "DET";
    case Pos::kOther: return "OTHER";
  }
  return "OTHER";
}

std::string_view NerName(Ner ner) {
  switch (ner) {
    case Ner::kPerson: return "PERSON";
    case Ner::kOrg: return "ORG";
    case Ner::kLoc: return "LOC";
    case Ner::kMisc: return "MISC";
    case Ner::kNone: return "NONE";
  }
  return "NONE";
}

std::string_view HighlightName(Highlight h) {
  switch (h) {
    case Highlight::kVerb: return "VERB";
    case Highlight::kNamedEntity: return "NAMED_ENTITY";
    case Highlight::kNone: return "NONE";
  }
  return "NONE";
}

std::optional<Pos> ParsePos(std::string_view name) {
  for (Pos p : {Pos::kVerb, Pos::kNoun, Pos::kAdj, Pos::kDet, Pos::kOther}) {
    if (PosName(p) == name) return p;
  }
  return std::nullopt;
}

std::optional<Ner> ParseNer(std::string_view name) {
  for (Ner n : {Ner::kPerson, Ner::kOrg, Ner::kLoc, Ner::kMisc, Ner::kNone}) {
    if (NerName(n) == name) return n;
  }
  return std::nullopt;
}

std::optional<Highlight> ParseHighlight(std::string_view name) {
  for (Highlight h :
       {Highlight::kVerb, Highlight::kNamedEntity, Highlight::kNone}) {
    if (HighlightName(h) == name) return h;
  }
  return std::nullopt;
}

const TaggedSentence* GoldBenchmark::FindSentence(std::string_view id) const {
  for (const TaggedSentence& s : sentences) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

std::size_t GoldBenchmark::SynsetCount() const {
  std::size_t n = 0;
  for (const auto& [id, list] : synsets) n += list.size();
  return n;
}

bool IsSeparatorChar(char c) {
  auto u = static_cast<unsigned char>(c);
  return u <= 0x20 || u == 0x7f;
}

Words SplitWords(std::string_view text) {
  Words out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSeparatorChar(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !IsSeparatorChar(text[i])) ++i;
    if (i > start) out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

std::string JoinWords(const Words& words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out += ' ';
    out += words[i];
  }
  return out;
}

std::string StripWhitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!IsSeparatorChar(c)) out += c;
  }
  return out;
}

std::string NormalizeWord(std::string_view word,
                          const NormalizationConfig& cfg) {
  std::string out(word);
  if (cfg.case_fold) {
    for (char& c : out) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
  }
  return out;
}

namespace {

bool IsSinglePunct(const std::string& w) {
  return w.size() == 1 && std::ispunct(static_cast<unsigned char>(w[0]));
}

}  // namespace

Words NormalizeSlot(const Words& words, const NormalizationConfig& cfg) {
  Words out;
  out.reserve(words.size());
  for (const std::string& w : words) out.push_back(NormalizeWord(w, cfg));
  if (cfg.strip_terminal_punct && out.size() > 1 && IsSinglePunct(out.back())) {
    out.pop_back();
  }
  return out;
}

std::string TripleKey(const ConcreteTriple& t, const NormalizationConfig& cfg) {
  std::string key;
  auto append = [&](const Words& slot) {
    Words norm = NormalizeSlot(slot, cfg);
    for (std::size_t i = 0; i < norm.size(); ++i) {
      if (i > 0) key += '\x1f';
      key += norm[i];
    }
  };
  append(t.subject);
  key += '\x1e';
  append(t.predicate);
  key += '\x1e';
  append(t.object);
  return key;
}

ConcreteTriple ToConcrete(const SystemExtraction& e) {
  return {SplitWords(e.subject), SplitWords(e.predicate),
          SplitWords(e.object)};
}

void ValidateSentence(const TaggedSentence& s) {
  if (s.id.empty()) {
    throw Error(ErrorCode::kSchemaViolation, "sentence id is empty");
  }
  std::string joined;
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    const Token& t = s.tokens[i];
    std::string where = "sentence " + s.id + ", token " + std::to_string(i);
    if (t.index != static_cast<int>(i)) {
      throw Error(ErrorCode::kSchemaViolation,
                  "token index " + std::to_string(t.index) +
                      " does not match its position",
                  where);
    }
    if (t.text.empty()) {
      throw Error(ErrorCode::kSchemaViolation, "empty token text", where);
    }
    for (char c : t.text) {
      if (IsSeparatorChar(c)) {
        throw Error(ErrorCode::kSchemaViolation,
                    "token text contains whitespace", where);
      }
    }
    joined += t.text;
  }
  if (joined != StripWhitespace(s.raw)) {
    throw Error(ErrorCode::kTokenizationMismatch,
                "tokens do not reproduce the raw sentence text",
                "sentence " + s.id);
  }
}

void ValidateSlot(const SlotTemplate& slot, const TaggedSentence& s) {
  if (slot.alternatives.empty()) {
    throw Error(ErrorCode::kEmptyAlternative, "slot has no alternatives");
  }
  const int n = static_cast<int>(s.tokens.size());
  for (const Alternative& alt : slot.alternatives) {
    if (alt.empty()) {
      throw Error(ErrorCode::kEmptyAlternative, "slot alternative is empty");
    }
    bool has_required = false;
    int prev = -1;
    for (const SlotToken& st : alt) {
      if (st.token_index < 0 || st.token_index >= n) {
        throw Error(ErrorCode::kTokenNotInSentence,
                    "token index " + std::to_string(st.token_index) +
                        " outside sentence " + s.id);
      }
      if (st.token_index <= prev) {
        throw Error(ErrorCode::kInvalidArgument,
                    "slot token indices must be strictly increasing");
      }
      prev = st.token_index;
      has_required = has_required || !st.optional;
    }
    if (!has_required) {
      throw Error(ErrorCode::kAllOptional,
                  "alternative has no required token");
    }
  }
}

void ValidateTriple(const TripleTemplate& t, const TaggedSentence& s) {
  ValidateSlot(t.subject, s);
  ValidateSlot(t.predicate, s);
  ValidateSlot(t.object, s);
}

void ValidateSynset(const FactSynset& f, const TaggedSentence& s) {
  if (f.triples.empty()) {
    throw Error(ErrorCode::kEmpty, "synset " + f.id + " has no triples");
  }
  for (std::size_t i = 0; i < f.triples.size(); ++i) {
    try {
      ValidateTriple(f.triples[i], s);
    } catch (const Error& e) {
      throw e.WithLocation("synset " + f.id + ", triple " + std::to_string(i));
    }
  }
}

void ValidateBenchmark(const GoldBenchmark& g) {
  std::map<std::string, const TaggedSentence*> by_id;
  for (const TaggedSentence& s : g.sentences) {
    ValidateSentence(s);
    if (!by_id.emplace(s.id, &s).second) {
      throw Error(ErrorCode::kDuplicateId, "duplicate sentence id " + s.id);
    }
  }
  for (const auto& [sid, list] : g.synsets) {
    auto it = by_id.find(sid);
    if (it == by_id.end()) {
      throw Error(ErrorCode::kUnknownSentence,
                  "synsets reference unknown sentence " + sid);
    }
    std::map<std::string, int> seen;
    for (const FactSynset& f : list) {
      if (f.id.empty()) {
        throw Error(ErrorCode::kSchemaViolation, "empty synset id",
                    "sentence " + sid);
      }
      if (seen[f.id]++ > 0) {
        throw Error(ErrorCode::kDuplicateId, "duplicate synset id " + f.id,
                    "sentence " + sid);
      }
      try {
        ValidateSynset(f, *it->second);
      } catch (const Error& e) {
        throw e.WithLocation("sentence " + sid);
      }
    }
  }
}

void ValidateExtraction(const SystemExtraction& e) {
  if (SplitWords(e.subject).empty() || SplitWords(e.predicate).empty() ||
      SplitWords(e.object).empty()) {
    throw Error(ErrorCode::kMalformedInput,
                "extraction slots must be non-empty after trimming");
  }
  if (e.confidence && (*e.confidence < 0.0 || *e.confidence > 1.0)) {
    throw Error(ErrorCode::kConfidenceOutOfRange,
                "confidence outside [0,1]");
  }
}

}  // namespace factbench
