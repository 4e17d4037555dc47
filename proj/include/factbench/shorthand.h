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

#ifndef FACTBENCH_SHORTHAND_H_
#define FACTBENCH_SHORTHAND_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "factbench/core_model.h"

namespace factbench {

struct ExpansionLimits {
  std::uint64_t max_variants_per_triple = 4096;
  std::uint64_t max_variants_per_synset = 65536;
};

// Parses slot shorthand against a sentence:
//
//   SLOT := ALT ("|" ALT)*      ALT := WORD+      WORD := "[" TEXT "]" | TEXT
//
// Bracketed words are optional. Words are aligned to sentence tokens left to
// right, each to the earliest token at or after the previous match whose
// normalized text is equal.
SlotTemplate ParseSlotShorthand(std::string_view text,
                                const TaggedSentence& sentence,
                                const NormalizationConfig& cfg);

std::string FormatSlotShorthand(const SlotTemplate& slot,
                                const TaggedSentence& sentence);

// The slot ParseSlotShorthand would produce from FormatSlotShorthand(slot):
// identical except that references to repeated tokens move to the earliest
// occurrence consistent with sentence order.
SlotTemplate CanonicalizeSlot(const SlotTemplate& slot,
                              const TaggedSentence& sentence,
                              const NormalizationConfig& cfg);

// Number of variants expand would enumerate before deduplication:
// prod over slots of sum over alternatives of 2^(optional tokens).
// Saturates at UINT64_MAX.
std::uint64_t VariantCount(const TripleTemplate& t);

// Every realization of one slot, fullest first within each alternative.
std::vector<Words> ExpandSlot(const SlotTemplate& slot,
                              const TaggedSentence& sentence);

struct Expansion {
  // Distinct triples in first-generated order, with their keys.
  std::vector<ConcreteTriple> triples;
  std::vector<std::string> keys;
  // Variants enumerated before deduplication.
  std::uint64_t generated = 0;
};

// Throws Error(kVariantLimitExceeded) with count() set to the would-be
// variant count when the limit is exceeded.
Expansion ExpandTriple(const TripleTemplate& t, const TaggedSentence& sentence,
                       const NormalizationConfig& cfg,
                       const ExpansionLimits& lim = {});

Expansion ExpandSynset(const FactSynset& s, const TaggedSentence& sentence,
                       const NormalizationConfig& cfg,
                       const ExpansionLimits& lim = {});

struct GoldOverlap {
  std::string sentence_id;
  std::string key;
  std::vector<std::string> synset_ids;

  bool operator==(const GoldOverlap&) const = default;
};

struct SentenceIndex {
  std::vector<std::string> synset_ids;
  std::unordered_map<std::string, std::vector<std::string>> by_key;

  bool operator==(const SentenceIndex&) const = default;
};

// Exact-match lookup table from (sentence id, triple key) to synset ids.
// Every benchmark sentence has an entry, including those without synsets.
struct GoldIndex {
  NormalizationConfig cfg;
  std::map<std::string, SentenceIndex> sentences;
  // Keys shared by more than one synset of a sentence.
  std::vector<GoldOverlap> overlaps;
  std::size_t synset_count = 0;

  // nullptr when the key is not gold. Throws kUnknownSentence for sentence
  // ids outside the benchmark.
  const std::vector<std::string>* Lookup(const std::string& sentence_id,
                                         const std::string& key) const;
  bool HasSentence(const std::string& sentence_id) const {
    return sentences.count(sentence_id) > 0;
  }
};

// Sentences are indexed in parallel when built with OpenMP.
GoldIndex BuildGoldIndex(const GoldBenchmark& g, const NormalizationConfig& cfg,
                         const ExpansionLimits& lim = {});

// Single-threaded reference for BuildGoldIndex.
GoldIndex BuildGoldIndexSerial(const GoldBenchmark& g,
                               const NormalizationConfig& cfg,
                               const ExpansionLimits& lim = {});

}  // namespace factbench

#endif  // FACTBENCH_SHORTHAND_H_
