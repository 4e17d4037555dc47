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

#ifndef FACTBENCH_IO_FORMATS_H_
#define FACTBENCH_IO_FORMATS_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "factbench/core_model.h"
#include "factbench/scoring.h"

namespace factbench {

inline constexpr std::string_view kStateVersion = "1";

// Everything an annotation session needs to resume work.
struct AnnotationState {
  std::string version{kStateVersion};
  std::vector<TaggedSentence> sentences;
  std::map<std::string, std::vector<FactSynset>> synsets;
  std::optional<std::string> cursor;
  std::map<std::string, std::string> meta;  // annotator, timestamps
  // Unrecognized top-level fields: name -> compact JSON text. Written back
  // unchanged.
  std::map<std::string, std::string> extra;

  bool operator==(const AnnotationState&) const = default;

  // Gold view; sentences with no synsets are left out of the synset map.
  GoldBenchmark Gold() const;
  static AnnotationState FromGold(const GoldBenchmark& g);
};

struct SentenceRecord {
  std::string id;
  std::string text;

  bool operator==(const SentenceRecord&) const = default;
};

// Plain text (one sentence per non-blank line, ids "s1", "s2", ...) or a
// JSON array [{"id": ..., "text": ...}].
std::vector<SentenceRecord> LoadSentences(std::string_view bytes);

// Deterministic pretty-printed JSON with sorted keys and a trailing newline.
std::string SaveState(const AnnotationState& st);
AnnotationState LoadState(std::string_view bytes);
void ValidateState(const AnnotationState& st);

// sentence_id TAB synset_id TAB subject TAB predicate TAB object, one line per
// template, slots in shorthand notation.
std::string ExportTsv(const AnnotationState& st);
std::string ExportTsv(const GoldBenchmark& g);

GoldBenchmark ImportGoldTsv(std::string_view bytes,
                            const std::vector<TaggedSentence>& sentences,
                            const NormalizationConfig& cfg = {});

// Lints hand-written gold TSV: shorthand that cannot be parsed against its
// sentence becomes a diagnostic (EXPLICITNESS_VIOLATION for unalignable
// words) instead of an error; the rest goes through LintGold. Malformed
// lines and unknown sentences still throw.
std::vector<Diagnostic> LintGoldTsv(
    std::string_view bytes, const std::vector<TaggedSentence>& sentences,
    const NormalizationConfig& cfg = {}, const ExpansionLimits& lim = {});

// sentence_id TAB subject TAB predicate TAB object [TAB confidence]
std::vector<SystemExtraction> LoadSystemExtractions(std::string_view bytes);
std::string WriteSystemExtractions(
    const std::vector<SystemExtraction>& extractions);

}  // namespace factbench

#endif  // FACTBENCH_IO_FORMATS_H_
