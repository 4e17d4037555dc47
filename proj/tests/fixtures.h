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

#ifndef FACTBENCH_TESTS_FIXTURES_H_
#define FACTBENCH_TESTS_FIXTURES_H_

// Hand-encoded fixtures: the running example sentence with its CaRB-style
// gold extraction, system extractions t1-t4 and fact synsets f1-f4.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "factbench/core_model.h"
#include "factbench/io_formats.h"
#include "factbench/shorthand.h"
#include "factbench/tagger.h"

namespace factbench::testing {

inline std::string DataPath(const std::string& rel) {
  return std::string(FACTBENCH_DATA_DIR) + "/" + rel;
}

inline std::string ReadData(const std::string& rel) {
  std::ifstream in(DataPath(rel), std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline constexpr const char* kMitchell =
    "Sen. Mitchell is confident he has sufficient votes to block such a "
    "measure with procedural actions.";

inline TaggedSentence MitchellSentence() {
  return Tag(kMitchell, "sent1", DefaultTaggerConfig());
}

inline ConcreteTriple CarbGold() {
  return {SplitWords("Sen. Mitchell"), SplitWords("is confident he has"),
          SplitWords("sufficient votes to block such a measure with "
                     "procedural actions")};
}

inline std::vector<SystemExtraction> MitchellExtractions() {
  return {
      {"sent1", "Sen. Mitchell", "is confident he has", "sufficient", {}},
      {"sent1", "Sen. Mitchell", "is confident he has", "sufficient actions",
       {}},
      {"sent1", "Sen. Mitchell", "is confident he has",
       "sufficient procedural actions", {}},
      {"sent1", "Sen. Mitchell", "is confident he has", "sufficient votes", {}},
  };
}

inline TripleTemplate ParseTriple(const TaggedSentence& s, const char* subj,
                                  const char* pred, const char* obj) {
  NormalizationConfig cfg;
  return {ParseSlotShorthand(subj, s, cfg), ParseSlotShorthand(pred, s, cfg),
          ParseSlotShorthand(obj, s, cfg)};
}

// Fact synsets f1-f4. The grouped optional "[he has sufficient ... actions]"
// of f1 is written as two object alternatives.
inline GoldBenchmark MitchellGold() {
  TaggedSentence s = MitchellSentence();
  const char* subj = "Sen. Mitchell | he";
  const char* pre = "is confident he has sufficient votes to block";
  std::string p3a = std::string(pre) + " [such]";
  std::string p3b = std::string(pre) + " [such] [a]";
  std::string p4a = std::string(pre) + " [such] [a] measure with";
  std::string p4b = std::string(pre) + " [such] [a] measure";
  GoldBenchmark g;
  g.sentences = {s};
  g.synsets["sent1"] = {
      {"f1",
       {ParseTriple(s, subj, "is",
                    "confident | confident he has sufficient votes to block "
                    "such a measure with procedural actions")}},
      {"f2",
       {ParseTriple(s, subj, "is confident he has", "sufficient votes"),
        ParseTriple(s, subj, "is confident he has",
                    "sufficient votes to block [such] [a] measure")}},
      {"f3",
       {ParseTriple(s, subj, pre, "[such] [a] measure"),
        ParseTriple(s, subj, p3a.c_str(), "[a] measure"),
        ParseTriple(s, subj, p3b.c_str(), "measure")}},
      {"f4",
       {ParseTriple(s, subj, p4a.c_str(), "procedural actions"),
        ParseTriple(s, subj, p4b.c_str(), "with procedural actions")}},
  };
  return g;
}

inline std::vector<TaggedSentence> TagRecords(
    const std::vector<SentenceRecord>& records) {
  std::vector<TaggedSentence> out;
  for (const auto& r : records) {
    out.push_back(Tag(r.text, r.id, DefaultTaggerConfig()));
  }
  return out;
}

inline GoldBenchmark ToyGold() {
  auto sentences = TagRecords(LoadSentences(ReadData("toy/sentences.txt")));
  return ImportGoldTsv(ReadData("toy/gold.tsv"), sentences);
}

}  // namespace factbench::testing

#endif  // FACTBENCH_TESTS_FIXTURES_H_
