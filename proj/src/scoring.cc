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

#include "factbench/scoring.h"

#include <algorithm>
#include <exception>
#include <set>
#include <unordered_map>

#include "factbench/error.h"

namespace factbench {

double HarmonicMean(double a, double b) {
  return a + b > 0.0 ? 2.0 * a * b / (a + b) : 0.0;
}

Prf ComputePrf(std::size_t tp, std::size_t fp, std::size_t fn) {
  Prf out;
  if (tp + fp > 0) {
    out.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
  }
  if (tp + fn > 0) {
    out.recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
  }
  out.f1 = HarmonicMean(out.precision, out.recall);
  return out;
}

std::vector<std::string> MatchExtraction(const SystemExtraction& e,
                                         const GoldIndex& index) {
  const std::string key = TripleKey(ToConcrete(e), index.cfg);
  const std::vector<std::string>* ids = index.Lookup(e.sentence_id, key);
  if (ids == nullptr) return {};
  return *ids;
}

namespace {

void Finish(ScoreReport& r) {
  Prf prf = ComputePrf(r.tp, r.fp, r.fn);
  r.precision = prf.precision;
  r.recall = prf.recall;
  r.f1 = prf.f1;
}

struct SentenceResult {
  SentenceCounts counts;
  std::vector<SynsetMatch> matched;
};

// Scores the extractions of one gold sentence.
SentenceResult ScoreSentence(const std::string& sentence_id,
                             const SentenceIndex& sidx,
                             const std::vector<SystemExtraction>& extractions,
                             const std::vector<std::size_t>& members,
                             const NormalizationConfig& cfg) {
  SentenceResult out;
  std::set<std::string> covered;
  for (std::size_t i : members) {
    const std::string key = TripleKey(ToConcrete(extractions[i]), cfg);
    auto hit = sidx.by_key.find(key);
    if (hit == sidx.by_key.end()) {
      ++out.counts.fp;
      continue;
    }
    for (const std::string& synset : hit->second) {
      covered.insert(synset);
      out.matched.push_back({i, sentence_id, synset});
    }
  }
  out.counts.tp = covered.size();
  out.counts.fn = sidx.synset_ids.size() - covered.size();
  return out;
}

}  // namespace

ScoreReport ScoreFactBased(const std::vector<SystemExtraction>& extractions,
                           const GoldIndex& index,
                           const FactScoreOptions& opts) {
  std::vector<const std::string*> sentence_ids;
  std::vector<const SentenceIndex*> sentence_idx;
  std::unordered_map<std::string, std::size_t> slot_of;
  for (const auto& [sid, sidx] : index.sentences) {
    slot_of.emplace(sid, sentence_ids.size());
    sentence_ids.push_back(&sid);
    sentence_idx.push_back(&sidx);
  }

  ScoreReport report;
  std::vector<std::vector<std::size_t>> members(sentence_ids.size());
  for (std::size_t i = 0; i < extractions.size(); ++i) {
    auto it = slot_of.find(extractions[i].sentence_id);
    if (it != slot_of.end()) {
      members[it->second].push_back(i);
      continue;
    }
    if (opts.unknown_sentences == UnknownSentencePolicy::kStrict) {
      throw Error(ErrorCode::kUnknownSentence,
                  "sentence " + extractions[i].sentence_id +
                      " is not in the benchmark",
                  "extraction " + std::to_string(i));
    }
    ++report.fp;
    ++report.per_sentence[extractions[i].sentence_id].fp;
  }

  const auto n = static_cast<std::ptrdiff_t>(sentence_ids.size());
  std::vector<SentenceResult> results(sentence_ids.size());
  std::vector<std::exception_ptr> errors(sentence_ids.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t s = 0; s < n; ++s) {
    const auto k = static_cast<std::size_t>(s);
    try {
      results[k] = ScoreSentence(*sentence_ids[k], *sentence_idx[k],
                                 extractions, members[k], index.cfg);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  for (std::size_t k = 0; k < results.size(); ++k) {
    SentenceResult& r = results[k];
    report.tp += r.counts.tp;
    report.fp += r.counts.fp;
    report.fn += r.counts.fn;
    report.per_sentence[*sentence_ids[k]] = r.counts;
    for (SynsetMatch& m : r.matched) report.matched.push_back(std::move(m));
  }
  // Within one extraction the matches are already in synset order.
  std::stable_sort(report.matched.begin(), report.matched.end(),
                   [](const SynsetMatch& a, const SynsetMatch& b) {
                     return a.extraction_index < b.extraction_index;
                   });
  Finish(report);
  return report;
}

ScoreReport ScoreFactBasedSerial(
    const std::vector<SystemExtraction>& extractions, const GoldIndex& index,
    const FactScoreOptions& opts) {
  ScoreReport report;
  std::map<std::string, std::set<std::string>> covered;
  for (const auto& [sid, sidx] : index.sentences) {
    report.per_sentence[sid] = SentenceCounts{};
    covered[sid];
  }
  for (std::size_t i = 0; i < extractions.size(); ++i) {
    const SystemExtraction& e = extractions[i];
    if (!index.HasSentence(e.sentence_id)) {
      if (opts.unknown_sentences == UnknownSentencePolicy::kStrict) {
        throw Error(ErrorCode::kUnknownSentence,
                    "sentence " + e.sentence_id + " is not in the benchmark",
                    "extraction " + std::to_string(i));
      }
      ++report.per_sentence[e.sentence_id].fp;
      continue;
    }
    std::vector<std::string> ids = MatchExtraction(e, index);
    if (ids.empty()) {
      ++report.per_sentence[e.sentence_id].fp;
      continue;
    }
    for (std::string& id : ids) {
      covered[e.sentence_id].insert(id);
      report.matched.push_back({i, e.sentence_id, std::move(id)});
    }
  }
  for (const auto& [sid, sidx] : index.sentences) {
    SentenceCounts& c = report.per_sentence[sid];
    c.tp = covered[sid].size();
    c.fn = sidx.synset_ids.size() - c.tp;
  }
  for (const auto& [sid, c] : report.per_sentence) {
    report.tp += c.tp;
    report.fp += c.fp;
    report.fn += c.fn;
  }
  Finish(report);
  return report;
}

ScoreReport ScoreFactBased(const std::vector<SystemExtraction>& extractions,
                           const GoldBenchmark& g,
                           const NormalizationConfig& cfg,
                           const ExpansionLimits& lim,
                           const FactScoreOptions& opts) {
  return ScoreFactBased(extractions, BuildGoldIndex(g, cfg, lim), opts);
}

namespace {

std::size_t MultisetOverlap(Words a, Words b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0, n = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++n;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return n;
}

}  // namespace

PairScore PairTokenOverlap(const ConcreteTriple& system,
                           const ConcreteTriple& gold,
                           const NormalizationConfig& cfg) {
  std::size_t matched = 0, sys_total = 0, gold_total = 0;
  const Words* sys_slots[] = {&system.subject, &system.predicate,
                              &system.object};
  const Words* gold_slots[] = {&gold.subject, &gold.predicate, &gold.object};
  for (int s = 0; s < 3; ++s) {
    Words a = NormalizeSlot(*sys_slots[s], cfg);
    Words b = NormalizeSlot(*gold_slots[s], cfg);
    sys_total += a.size();
    gold_total += b.size();
    matched += MultisetOverlap(std::move(a), std::move(b));
  }
  PairScore out;
  if (sys_total > 0) {
    out.precision = static_cast<double>(matched) / static_cast<double>(sys_total);
  }
  if (gold_total > 0) {
    out.recall = static_cast<double>(matched) / static_cast<double>(gold_total);
  }
  return out;
}

PairScore PairTokenOverlap(const SystemExtraction& system,
                           const ConcreteTriple& gold,
                           const NormalizationConfig& cfg) {
  return PairTokenOverlap(ToConcrete(system), gold, cfg);
}

TokenOverlapReport ScoreTokenOverlap(
    const std::vector<SystemExtraction>& extractions, const GoldTriples& gold,
    const NormalizationConfig& cfg) {
  TokenOverlapReport report;
  report.extraction_count = extractions.size();
  for (const auto& [sid, list] : gold) report.gold_count += list.size();

  std::map<std::string, std::vector<std::size_t>> by_sentence;
  for (std::size_t i = 0; i < extractions.size(); ++i) {
    by_sentence[extractions[i].sentence_id].push_back(i);
  }

  double precision_sum = 0.0;
  double recall_sum = 0.0;
  for (const auto& [sid, members] : by_sentence) {
    auto g = gold.find(sid);
    if (g == gold.end()) continue;
    const std::vector<ConcreteTriple>& golds = g->second;

    struct Candidate {
      std::size_t ext;
      std::size_t gold;
      PairScore score;
      double f1;
    };
    std::vector<Candidate> candidates;
    for (std::size_t i : members) {
      ConcreteTriple sys = ToConcrete(extractions[i]);
      for (std::size_t j = 0; j < golds.size(); ++j) {
        PairScore ps = PairTokenOverlap(sys, golds[j], cfg);
        double f1 = ps.F1();
        if (f1 > 0.0) candidates.push_back({i, j, ps, f1});
      }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                if (a.f1 != b.f1) return a.f1 > b.f1;
                if (a.ext != b.ext) return a.ext < b.ext;
                return a.gold < b.gold;
              });
    std::set<std::size_t> used_ext, used_gold;
    for (const Candidate& c : candidates) {
      if (used_ext.count(c.ext) || used_gold.count(c.gold)) continue;
      used_ext.insert(c.ext);
      used_gold.insert(c.gold);
      precision_sum += c.score.precision;
      recall_sum += c.score.recall;
      report.assignments.push_back({c.ext, sid, c.gold, c.score});
    }
  }
  std::sort(report.assignments.begin(), report.assignments.end(),
            [](const OverlapAssignment& a, const OverlapAssignment& b) {
              return a.extraction_index < b.extraction_index;
            });
  if (report.extraction_count > 0) {
    report.precision =
        precision_sum / static_cast<double>(report.extraction_count);
  }
  if (report.gold_count > 0) {
    report.recall = recall_sum / static_cast<double>(report.gold_count);
  }
  report.f1 = HarmonicMean(report.precision, report.recall);
  return report;
}

GoldTriples FullestRealizations(const GoldBenchmark& g) {
  GoldTriples out;
  for (const TaggedSentence& s : g.sentences) {
    auto it = g.synsets.find(s.id);
    if (it == g.synsets.end()) continue;
    auto& list = out[s.id];
    for (const FactSynset& f : it->second) {
      for (const TripleTemplate& t : f.triples) {
        auto fullest = [&](const SlotTemplate& slot) {
          Words w;
          for (const SlotToken& st : slot.alternatives.at(0)) {
            w.push_back(
                s.tokens.at(static_cast<std::size_t>(st.token_index)).text);
          }
          return w;
        };
        list.push_back(
            {fullest(t.subject), fullest(t.predicate), fullest(t.object)});
      }
    }
  }
  return out;
}

namespace {

bool ContainsRun(const Words& hay, const Words& needle) {
  if (needle.empty() || needle.size() > hay.size()) return false;
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) !=
         hay.end();
}

bool ContainsAny(const Words& hay, const std::set<Words>& needles) {
  for (const Words& n : needles) {
    if (ContainsRun(hay, n)) return true;
  }
  return false;
}

std::set<Words> GoldArguments(const TaggedSentence& s,
                              const std::vector<FactSynset>& synsets,
                              const NormalizationConfig& cfg,
                              const ExpansionLimits& lim) {
  std::set<Words> args;
  for (const FactSynset& f : synsets) {
    Expansion exp = ExpandSynset(f, s, cfg, lim);
    for (const ConcreteTriple& t : exp.triples) {
      args.insert(NormalizeSlot(t.subject, cfg));
      args.insert(NormalizeSlot(t.object, cfg));
    }
  }
  return args;
}

std::set<Words> NerSpans(const TaggedSentence& s,
                         const NormalizationConfig& cfg) {
  std::set<Words> spans;
  Words run;
  Ner label = Ner::kNone;
  for (const Token& t : s.tokens) {
    if (t.ner != label && !run.empty()) {
      spans.insert(NormalizeSlot(run, cfg));
      run.clear();
    }
    label = t.ner;
    if (t.ner != Ner::kNone) run.push_back(t.text);
  }
  if (!run.empty()) spans.insert(NormalizeSlot(run, cfg));
  return spans;
}

}  // namespace

std::vector<SystemExtraction> PruneNeCentric(
    const std::vector<SystemExtraction>& extractions, const GoldBenchmark& g,
    const NormalizationConfig& cfg, const ExpansionLimits& lim,
    ArgumentSource source) {
  std::map<std::string, std::set<Words>> args_by_sentence;
  for (const TaggedSentence& s : g.sentences) {
    if (source == ArgumentSource::kNerSpans) {
      args_by_sentence[s.id] = NerSpans(s, cfg);
      continue;
    }
    auto it = g.synsets.find(s.id);
    if (it == g.synsets.end()) continue;
    args_by_sentence[s.id] = GoldArguments(s, it->second, cfg, lim);
  }
  std::vector<SystemExtraction> kept;
  for (const SystemExtraction& e : extractions) {
    auto it = args_by_sentence.find(e.sentence_id);
    if (it == args_by_sentence.end()) continue;
    Words subject = NormalizeSlot(SplitWords(e.subject), cfg);
    Words object = NormalizeSlot(SplitWords(e.object), cfg);
    if (ContainsAny(subject, it->second) && ContainsAny(object, it->second)) {
      kept.push_back(e);
    }
  }
  return kept;
}

}  // namespace factbench
