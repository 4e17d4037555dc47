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

#ifndef FACTBENCH_TESTS_GENERATORS_H_
#define FACTBENCH_TESTS_GENERATORS_H_

// Seeded random instances for property tests.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "factbench/core_model.h"
#include "factbench/io_formats.h"
#include "factbench/shorthand.h"

namespace factbench::testing {

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int Int(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool Coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937& rng() { return rng_; }

  // With `distinct`, every token text is unique; otherwise words come from
  // a small vocabulary so repeats (and duplicate realizations) are common.
  TaggedSentence Sentence(const std::string& id, bool distinct) {
    static const char* kVocab[] = {"the", "Cat", "sat", "on", "a", "mat",
                                   "and", "The", "dog", "ran"};
    TaggedSentence s;
    s.id = id;
    int n = Int(4, 14);
    for (int i = 0; i < n; ++i) {
      Token t;
      t.index = i;
      if (distinct) {
        t.text = (Coin(0.3) ? "W" : "w") + std::to_string(i) + "x" +
                 std::to_string(Int(0, 99));
      } else {
        t.text = kVocab[Int(0, 9)];
      }
      if (i == n - 1 && Coin(0.3)) t.text = ".";
      t.pos = static_cast<Pos>(Int(0, 4));
      t.ner = static_cast<Ner>(Int(0, 4));
      t.highlight = static_cast<Highlight>(Int(0, 2));
      if (!s.raw.empty()) s.raw += ' ';
      s.raw += t.text;
      s.tokens.push_back(std::move(t));
    }
    return s;
  }

  // Increasing token indices, at least one required, at most
  // `max_optional` optional.
  Alternative Alt(const TaggedSentence& s, int max_optional) {
    int n = static_cast<int>(s.tokens.size());
    int len = Int(1, std::min(n, 5));
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::shuffle(idx.begin(), idx.end(), rng_);
    idx.resize(static_cast<std::size_t>(len));
    std::sort(idx.begin(), idx.end());
    Alternative alt;
    int optional = 0;
    for (int i : idx) {
      bool opt = optional < max_optional && Coin(0.4);
      optional += opt;
      alt.push_back({i, opt});
    }
    bool any_required = std::any_of(alt.begin(), alt.end(),
                                    [](const SlotToken& t) { return !t.optional; });
    if (!any_required) alt[static_cast<std::size_t>(Int(0, len - 1))].optional = false;
    return alt;
  }

  SlotTemplate Slot(const TaggedSentence& s, int max_alts = 2,
                    int max_optional = 3) {
    SlotTemplate slot;
    int k = Int(1, max_alts);
    for (int i = 0; i < k; ++i) slot.alternatives.push_back(Alt(s, max_optional));
    return slot;
  }

  TripleTemplate Triple(const TaggedSentence& s) {
    return {Slot(s), Slot(s), Slot(s)};
  }

  // Sentences s0..s{n-1}; some get no synsets.
  GoldBenchmark Benchmark(int sentences, bool distinct) {
    GoldBenchmark g;
    for (int i = 0; i < sentences; ++i) {
      TaggedSentence s = Sentence("s" + std::to_string(i), distinct);
      int synsets = Int(0, 3);
      for (int f = 0; f < synsets; ++f) {
        FactSynset fs;
        fs.id = "f" + std::to_string(f);
        int triples = Int(1, 3);
        for (int t = 0; t < triples; ++t) fs.triples.push_back(Triple(s));
        g.synsets[s.id].push_back(std::move(fs));
      }
      g.sentences.push_back(std::move(s));
    }
    return g;
  }

  // Mix of exact realizations (with random case and spacing changes) and
  // noise, possibly repeated.
  std::vector<SystemExtraction> Extractions(const GoldBenchmark& g) {
    std::vector<SystemExtraction> out;
    for (const auto& s : g.sentences) {
      auto it = g.synsets.find(s.id);
      if (it != g.synsets.end()) {
        for (const auto& f : it->second) {
          if (!Coin(0.6)) continue;
          const auto& t = f.triples[static_cast<std::size_t>(
              Int(0, static_cast<int>(f.triples.size()) - 1))];
          auto e = ExpandTriple(t, s, NormalizationConfig{});
          const auto& c = e.triples[static_cast<std::size_t>(
              Int(0, static_cast<int>(e.triples.size()) - 1))];
          SystemExtraction x{s.id, Render(c.subject), Render(c.predicate),
                             Render(c.object), {}};
          out.push_back(x);
          if (Coin(0.2)) out.push_back(x);
        }
      }
      int noise = Int(0, 2);
      for (int i = 0; i < noise; ++i) {
        out.push_back({s.id, s.tokens[0].text, s.tokens.back().text,
                       s.tokens[s.tokens.size() / 2].text, {}});
      }
    }
    std::shuffle(out.begin(), out.end(), rng_);
    return out;
  }

  AnnotationState State(int sentences) {
    AnnotationState st = AnnotationState::FromGold(Benchmark(sentences, true));
    if (Coin()) st.cursor = st.sentences[0].id;
    if (Coin()) st.meta["annotator"] = "a" + std::to_string(Int(0, 9));
    if (Coin(0.3)) st.extra["x_custom"] = "{\"k\":[1,2]}";
    return st;
  }

 private:
  std::string Render(const Words& w) {
    std::string out;
    for (const auto& word : w) {
      if (!out.empty()) out += Coin(0.1) ? "  " : " ";
      std::string x = word;
      if (Coin(0.2)) {
        for (char& ch : x) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      }
      out += x;
    }
    return out;
  }

  std::mt19937 rng_;
};

}  // namespace factbench::testing

#endif  // FACTBENCH_TESTS_GENERATORS_H_
