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

#ifndef FACTBENCH_SCORING_H_
#define FACTBENCH_SCORING_H_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "factbench/core_model.h"
#include "factbench/shorthand.h"

namespace factbench {

// What to do with extractions whose sentence id is not in the gold
// benchmark. Dropping them silently would inflate precision, so there is
// no such option.
enum class UnknownSentencePolicy { kStrict, kCountAsFalsePositive };

struct FactScoreOptions {
  UnknownSentencePolicy unknown_sentences = UnknownSentencePolicy::kStrict;
};

struct SentenceCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  bool operator==(const SentenceCounts&) const = default;
};

struct SynsetMatch {
  std::size_t extraction_index = 0;
  std::string sentence_id;
  std::string synset_id;

  bool operator==(const SynsetMatch&) const = default;
};

struct ScoreReport {
  std::size_t tp = 0;  // covered synsets
  std::size_t fp = 0;  // extractions matching no synset
  std::size_t fn = 0;  // synsets covered by nothing
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::map<std::string, SentenceCounts> per_sentence;
  // Ordered by extraction index, then synset order within the sentence.
  std::vector<SynsetMatch> matched;

  bool operator==(const ScoreReport&) const = default;
};

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Ratios with the 0/0 := 0 convention.
Prf ComputePrf(std::size_t tp, std::size_t fp, std::size_t fn);
double HarmonicMean(double a, double b);

// Synset ids whose expansion contains the extraction, in synset order.
// Uses the normalization the index was built with.
std::vector<std::string> MatchExtraction(const SystemExtraction& e,
                                         const GoldIndex& index);

// Fact-level exact matching. A synset counts once however many extractions
// cover it; every extraction matching no synset is a false positive.
// Sentences are scored in parallel when built with OpenMP.
ScoreReport ScoreFactBased(const std::vector<SystemExtraction>& extractions,
                           const GoldIndex& index,
                           const FactScoreOptions& opts = {});

ScoreReport ScoreFactBased(const std::vector<SystemExtraction>& extractions,
                           const GoldBenchmark& g,
                           const NormalizationConfig& cfg,
                           const ExpansionLimits& lim = {},
                           const FactScoreOptions& opts = {});

// Single-threaded reference for ScoreFactBased.
ScoreReport ScoreFactBasedSerial(
    const std::vector<SystemExtraction>& extractions, const GoldIndex& index,
    const FactScoreOptions& opts = {});

struct PairScore {
  double precision = 0.0;
  double recall = 0.0;

  double F1() const { return HarmonicMean(precision, recall); }
  bool operator==(const PairScore&) const = default;
};

// Token-wise overlap of one system triple against one gold triple: per-slot
// multiset intersection, summed over slots, divided by the system (precision)
// or gold (recall) token totals.
PairScore PairTokenOverlap(const ConcreteTriple& system,
                           const ConcreteTriple& gold,
                           const NormalizationConfig& cfg);
PairScore PairTokenOverlap(const SystemExtraction& system,
                           const ConcreteTriple& gold,
                           const NormalizationConfig& cfg);

struct OverlapAssignment {
  std::size_t extraction_index = 0;
  std::string sentence_id;
  std::size_t gold_index = 0;  // position in that sentence's gold list
  PairScore score;

  bool operator==(const OverlapAssignment&) const = default;
};

struct TokenOverlapReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t extraction_count = 0;
  std::size_t gold_count = 0;
  std::vector<OverlapAssignment> assignments;
};

using GoldTriples = std::map<std::string, std::vector<ConcreteTriple>>;

// Dataset-level token overlap. Within each sentence, extractions and gold
// triples are paired one-to-one greedily by descending pair F1 (ties: lower
// extraction index, then lower gold index). Precision averages assigned pair
// precisions over all extractions; recall averages assigned pair recalls
// over all gold triples.
TokenOverlapReport ScoreTokenOverlap(
    const std::vector<SystemExtraction>& extractions, const GoldTriples& gold,
    const NormalizationConfig& cfg);

// Gold triples for token-overlap scoring from a synset benchmark: the
// fullest realization of every template (first alternative of each slot,
// optional tokens kept).
GoldTriples FullestRealizations(const GoldBenchmark& g);

// Where the argument strings that extractions must contain come from.
enum class ArgumentSource {
  kGoldArguments,  // subjects and objects of all expanded gold triples
  kNerSpans,       // maximal NER-labeled token runs of the sentence
};

// Keeps extractions whose subject and object each contain some argument
// string of their sentence as a contiguous token run. Order is preserved.
std::vector<SystemExtraction> PruneNeCentric(
    const std::vector<SystemExtraction>& extractions, const GoldBenchmark& g,
    const NormalizationConfig& cfg, const ExpansionLimits& lim = {},
    ArgumentSource source = ArgumentSource::kGoldArguments);

enum class Severity { kError, kWarning, kNote };

enum class LintCode {
  kUnknownSentence,
  kDuplicateSynsetId,
  kEmptySynset,
  kEmptySlot,
  kExplicitnessViolation,
  kTokenOrderViolation,
  kAllOptionalAlternative,
  kGoldOverlap,
  kVariantLimitExceeded,
  kAdjacentOptionalReview,
};

std::string_view SeverityName(Severity s);
std::string_view LintCodeName(LintCode c);

struct Diagnostic {
  Severity severity = Severity::kNote;
  std::string sentence_id;
  std::string synset_id;  // empty for sentence-level findings
  LintCode code = LintCode::kEmptySlot;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

// Structural and guideline checks over gold annotations. Never throws on
// malformed templates; findings are ordered by sentence, synset, then code.
std::vector<Diagnostic> LintGold(const GoldBenchmark& g,
                                 const NormalizationConfig& cfg,
                                 const ExpansionLimits& lim = {});

// Sorts diagnostics into the canonical (sentence, synset, code) order, where
// sentence and synset order follow the benchmark.
void SortDiagnostics(const GoldBenchmark& g, std::vector<Diagnostic>& diags);

}  // namespace factbench

#endif  // FACTBENCH_SCORING_H_
