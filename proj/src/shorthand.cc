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

#include "factbench/shorthand.h"

#include <exception>
#include <limits>
#include <unordered_set>

#include "factbench/error.h"

namespace factbench {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t SatMul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t SatAdd(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t SatPow2(std::size_t k) {
  return k >= 64 ? kSaturated : (std::uint64_t{1} << k);
}

struct ShorthandWord {
  std::string text;
  bool optional = false;
};

bool IsShorthandSpecial(char c) { return c == '[' || c == ']' || c == '|'; }

std::vector<std::vector<ShorthandWord>> Lex(std::string_view text) {
  std::vector<std::vector<ShorthandWord>> alts(1);
  bool in_bracket = false;
  int bracket_words = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (IsSeparatorChar(c)) {
      ++i;
    } else if (c == '[') {
      if (in_bracket) {
        throw Error(ErrorCode::kUnbalancedBrackets, "nested '['",
                    "column " + std::to_string(i + 1));
      }
      in_bracket = true;
      bracket_words = 0;
      ++i;
    } else if (c == ']') {
      if (!in_bracket) {
        throw Error(ErrorCode::kUnbalancedBrackets, "']' without '['",
                    "column " + std::to_string(i + 1));
      }
      if (bracket_words == 0) {
        throw Error(ErrorCode::kMalformedInput, "empty brackets",
                    "column " + std::to_string(i + 1));
      }
      in_bracket = false;
      ++i;
    } else if (c == '|') {
      if (in_bracket) {
        throw Error(ErrorCode::kUnbalancedBrackets, "'|' inside brackets",
                    "column " + std::to_string(i + 1));
      }
      if (alts.back().empty()) {
        throw Error(ErrorCode::kEmptyAlternative,
                    "alternative " + std::to_string(alts.size()) + " is empty",
                    "column " + std::to_string(i + 1));
      }
      alts.emplace_back();
      ++i;
    } else {
      std::size_t start = i;
      while (i < text.size() && !IsSeparatorChar(text[i]) &&
             !IsShorthandSpecial(text[i])) {
        ++i;
      }
      alts.back().push_back(
          {std::string(text.substr(start, i - start)), in_bracket});
      if (in_bracket) ++bracket_words;
    }
  }
  if (in_bracket) {
    throw Error(ErrorCode::kUnbalancedBrackets, "unclosed '['");
  }
  if (alts.back().empty()) {
    throw Error(ErrorCode::kEmptyAlternative,
                "alternative " + std::to_string(alts.size()) + " is empty");
  }
  return alts;
}

}  // namespace

SlotTemplate ParseSlotShorthand(std::string_view text,
                                const TaggedSentence& sentence,
                                const NormalizationConfig& cfg) {
  SlotTemplate slot;
  std::vector<std::string> norm_tokens;
  norm_tokens.reserve(sentence.tokens.size());
  for (const Token& t : sentence.tokens) {
    norm_tokens.push_back(NormalizeWord(t.text, cfg));
  }
  for (const auto& words : Lex(text)) {
    bool has_required = false;
    for (const ShorthandWord& w : words) has_required |= !w.optional;
    if (!has_required) {
      throw Error(ErrorCode::kAllOptional,
                  "alternative '" + words.front().text +
                      "...' has no required word");
    }
    Alternative alt;
    std::size_t pos = 0;
    for (const ShorthandWord& w : words) {
      std::string target = NormalizeWord(w.text, cfg);
      std::size_t j = pos;
      while (j < norm_tokens.size() && norm_tokens[j] != target) ++j;
      if (j == norm_tokens.size()) {
        throw Error(ErrorCode::kTokenNotInSentence,
                    "'" + w.text + "' cannot be aligned to sentence " +
                        sentence.id);
      }
      alt.push_back({static_cast<int>(j), w.optional});
      pos = j + 1;
    }
    slot.alternatives.push_back(std::move(alt));
  }
  return slot;
}

std::string FormatSlotShorthand(const SlotTemplate& slot,
                                const TaggedSentence& sentence) {
  std::string out;
  for (std::size_t a = 0; a < slot.alternatives.size(); ++a) {
    if (a > 0) out += " | ";
    const Alternative& alt = slot.alternatives[a];
    for (std::size_t i = 0; i < alt.size(); ++i) {
      if (i > 0) out += ' ';
      const std::string& text =
          sentence.tokens.at(static_cast<std::size_t>(alt[i].token_index)).text;
      if (alt[i].optional) {
        out += '[' + text + ']';
      } else {
        out += text;
      }
    }
  }
  return out;
}

SlotTemplate CanonicalizeSlot(const SlotTemplate& slot,
                              const TaggedSentence& sentence,
                              const NormalizationConfig& cfg) {
  return ParseSlotShorthand(FormatSlotShorthand(slot, sentence), sentence,
                            cfg);
}

std::uint64_t VariantCount(const TripleTemplate& t) {
  std::uint64_t total = 1;
  for (const SlotTemplate* slot : {&t.subject, &t.predicate, &t.object}) {
    std::uint64_t per_slot = 0;
    for (const Alternative& alt : slot->alternatives) {
      std::size_t k = 0;
      for (const SlotToken& st : alt) k += st.optional ? 1 : 0;
      per_slot = SatAdd(per_slot, SatPow2(k));
    }
    total = SatMul(total, per_slot);
  }
  return total;
}

std::vector<Words> ExpandSlot(const SlotTemplate& slot,
                              const TaggedSentence& sentence) {
  std::vector<Words> out;
  for (const Alternative& alt : slot.alternatives) {
    std::vector<std::size_t> optional_pos;
    for (std::size_t i = 0; i < alt.size(); ++i) {
      if (alt[i].optional) optional_pos.push_back(i);
    }
    if (optional_pos.size() >= 40) {
      throw Error(ErrorCode::kVariantLimitExceeded,
                  "alternative has too many optional tokens")
          .set_count(SatPow2(optional_pos.size()));
    }
    const std::uint64_t subsets = std::uint64_t{1} << optional_pos.size();
    for (std::uint64_t m = subsets; m-- > 0;) {
      Words words;
      std::size_t opt = 0;
      for (const SlotToken& st : alt) {
        bool keep = true;
        if (st.optional) keep = (m >> opt++) & 1;
        if (keep) {
          words.push_back(
              sentence.tokens.at(static_cast<std::size_t>(st.token_index)).text);
        }
      }
      out.push_back(std::move(words));
    }
  }
  return out;
}

namespace {

// Appends the distinct variants of `t` not yet in `seen` to `out`.
void ExpandInto(const TripleTemplate& t, const TaggedSentence& sentence,
                const NormalizationConfig& cfg, const ExpansionLimits& lim,
                std::unordered_set<std::string>& seen, Expansion& out) {
  const std::uint64_t count = VariantCount(t);
  if (count > lim.max_variants_per_triple) {
    throw Error(ErrorCode::kVariantLimitExceeded,
                "triple would expand to " + std::to_string(count) +
                    " variants (limit " +
                    std::to_string(lim.max_variants_per_triple) + ")")
        .set_count(count);
  }
  const std::vector<Words> subjects = ExpandSlot(t.subject, sentence);
  const std::vector<Words> predicates = ExpandSlot(t.predicate, sentence);
  const std::vector<Words> objects = ExpandSlot(t.object, sentence);
  for (const Words& s : subjects) {
    for (const Words& p : predicates) {
      for (const Words& o : objects) {
        ++out.generated;
        ConcreteTriple triple{s, p, o};
        std::string key = TripleKey(triple, cfg);
        if (seen.insert(key).second) {
          out.triples.push_back(std::move(triple));
          out.keys.push_back(std::move(key));
        }
      }
    }
  }
}

}  // namespace

Expansion ExpandTriple(const TripleTemplate& t, const TaggedSentence& sentence,
                       const NormalizationConfig& cfg,
                       const ExpansionLimits& lim) {
  Expansion out;
  std::unordered_set<std::string> seen;
  ExpandInto(t, sentence, cfg, lim, seen, out);
  return out;
}

Expansion ExpandSynset(const FactSynset& s, const TaggedSentence& sentence,
                       const NormalizationConfig& cfg,
                       const ExpansionLimits& lim) {
  Expansion out;
  std::unordered_set<std::string> seen;
  for (const TripleTemplate& t : s.triples) {
    ExpandInto(t, sentence, cfg, lim, seen, out);
  }
  if (out.triples.size() > lim.max_variants_per_synset) {
    throw Error(ErrorCode::kVariantLimitExceeded,
                "synset " + s.id + " expands to " +
                    std::to_string(out.triples.size()) +
                    " variants (limit " +
                    std::to_string(lim.max_variants_per_synset) + ")")
        .set_count(out.triples.size());
  }
  return out;
}

const std::vector<std::string>* GoldIndex::Lookup(
    const std::string& sentence_id, const std::string& key) const {
  auto it = sentences.find(sentence_id);
  if (it == sentences.end()) {
    throw Error(ErrorCode::kUnknownSentence,
                "sentence " + sentence_id + " is not in the benchmark");
  }
  auto hit = it->second.by_key.find(key);
  return hit == it->second.by_key.end() ? nullptr : &hit->second;
}

namespace {

const std::vector<FactSynset>& SynsetsOf(const GoldBenchmark& g,
                                         const std::string& sid) {
  static const std::vector<FactSynset> kNone;
  auto it = g.synsets.find(sid);
  return it == g.synsets.end() ? kNone : it->second;
}

// Indexes one sentence; overlaps are reported in first-seen key order.
SentenceIndex IndexSentence(const TaggedSentence& sentence,
                            const std::vector<FactSynset>& synsets,
                            const NormalizationConfig& cfg,
                            const ExpansionLimits& lim,
                            std::vector<GoldOverlap>& overlaps) {
  SentenceIndex idx;
  std::vector<std::string> key_order;
  for (const FactSynset& f : synsets) {
    idx.synset_ids.push_back(f.id);
    Expansion exp;
    try {
      exp = ExpandSynset(f, sentence, cfg, lim);
    } catch (const Error& e) {
      throw e.WithLocation("sentence " + sentence.id + ", synset " + f.id);
    }
    for (std::string& key : exp.keys) {
      auto [it, inserted] = idx.by_key.try_emplace(key);
      if (inserted) key_order.push_back(key);
      it->second.push_back(f.id);
    }
  }
  for (const std::string& key : key_order) {
    const auto& ids = idx.by_key.at(key);
    if (ids.size() > 1) overlaps.push_back({sentence.id, key, ids});
  }
  return idx;
}

}  // namespace

GoldIndex BuildGoldIndexSerial(const GoldBenchmark& g,
                               const NormalizationConfig& cfg,
                               const ExpansionLimits& lim) {
  GoldIndex index;
  index.cfg = cfg;
  for (const TaggedSentence& s : g.sentences) {
    const auto& synsets = SynsetsOf(g, s.id);
    index.synset_count += synsets.size();
    index.sentences[s.id] =
        IndexSentence(s, synsets, cfg, lim, index.overlaps);
  }
  return index;
}

GoldIndex BuildGoldIndex(const GoldBenchmark& g, const NormalizationConfig& cfg,
                         const ExpansionLimits& lim) {
  const auto n = static_cast<std::ptrdiff_t>(g.sentences.size());
  std::vector<SentenceIndex> parts(g.sentences.size());
  std::vector<std::vector<GoldOverlap>> part_overlaps(g.sentences.size());
  std::vector<std::exception_ptr> errors(g.sentences.size());

#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const TaggedSentence& s = g.sentences[static_cast<std::size_t>(i)];
    try {
      parts[static_cast<std::size_t>(i)] =
          IndexSentence(s, SynsetsOf(g, s.id), cfg, lim,
                        part_overlaps[static_cast<std::size_t>(i)]);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }

  // Report the first failing sentence in benchmark order, as the serial
  // reference would.
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  GoldIndex index;
  index.cfg = cfg;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    index.synset_count += parts[i].synset_ids.size();
    index.sentences[g.sentences[i].id] = std::move(parts[i]);
    for (auto& o : part_overlaps[i]) index.overlaps.push_back(std::move(o));
  }
  return index;
}

}  // namespace factbench
