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

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "factbench/error.h"
#include "factbench/scoring.h"

namespace factbench {

std::string_view SeverityName(Severity s) {
  switch (s) {
    case Severity::kError: return "error";
    case Severity::kWarning: return "warning";
    case Severity::kNote: return "note";
  }
  return "note";
}

std::string_view LintCodeName(LintCode c) {
  switch (c) {
    case LintCode::kUnknownSentence: return "UNKNOWN_SENTENCE";
    case LintCode::kDuplicateSynsetId: return "DUPLICATE_SYNSET_ID";
    case LintCode::kEmptySynset: return "EMPTY_SYNSET";
    case LintCode::kEmptySlot: return "EMPTY_SLOT";
    case LintCode::kExplicitnessViolation: return "EXPLICITNESS_VIOLATION";
    case LintCode::kTokenOrderViolation: return "TOKEN_ORDER_VIOLATION";
    case LintCode::kAllOptionalAlternative: return "ALL_OPTIONAL_ALTERNATIVE";
    case LintCode::kGoldOverlap: return "GOLD_OVERLAP";
    case LintCode::kVariantLimitExceeded: return "VARIANT_LIMIT_EXCEEDED";
    case LintCode::kAdjacentOptionalReview: return "ADJACENT_OPTIONAL_REVIEW";
  }
  return "UNKNOWN";
}

namespace {

const char* kSlotNames[] = {"subject", "predicate", "object"};

// Checks one slot; returns false when it cannot be expanded.
bool LintSlot(const SlotTemplate& slot, const TaggedSentence& s,
              const std::string& synset_id, const std::string& where,
              std::vector<Diagnostic>& out) {
  auto emit = [&](Severity sev, LintCode code, const std::string& msg) {
    out.push_back({sev, s.id, synset_id, code, where + ": " + msg});
  };
  bool ok = true;
  if (slot.alternatives.empty()) {
    emit(Severity::kError, LintCode::kEmptySlot, "slot has no alternatives");
    return false;
  }
  const int n = static_cast<int>(s.tokens.size());
  for (std::size_t a = 0; a < slot.alternatives.size(); ++a) {
    const Alternative& alt = slot.alternatives[a];
    const std::string alt_name = "alternative " + std::to_string(a + 1);
    if (alt.empty()) {
      emit(Severity::kError, LintCode::kEmptySlot, alt_name + " is empty");
      ok = false;
      continue;
    }
    bool required = false;
    bool in_range = true;
    int prev = -1;
    bool ordered = true;
    int adjacent_run = 0;
    bool adjacent_flagged = false;
    for (const SlotToken& st : alt) {
      if (st.token_index < 0 || st.token_index >= n) {
        in_range = false;
      } else if (st.token_index <= prev) {
        ordered = false;
      }
      prev = std::max(prev, st.token_index);
      required = required || !st.optional;
      adjacent_run = st.optional ? adjacent_run + 1 : 0;
      if (adjacent_run >= 2 && !adjacent_flagged) {
        adjacent_flagged = true;
        emit(Severity::kNote, LintCode::kAdjacentOptionalReview,
             alt_name +
                 " has adjacent optional tokens; mixed subsets are accepted "
                 "as gold");
      }
    }
    if (!in_range) {
      emit(Severity::kError, LintCode::kExplicitnessViolation,
           alt_name + " references a token outside the sentence");
      ok = false;
    }
    if (!ordered) {
      emit(Severity::kError, LintCode::kTokenOrderViolation,
           alt_name + " does not follow sentence order");
      ok = false;
    }
    if (!required) {
      emit(Severity::kError, LintCode::kAllOptionalAlternative,
           alt_name + " has no required token");
      ok = false;
    }
  }
  return ok;
}

}  // namespace

std::vector<Diagnostic> LintGold(const GoldBenchmark& g,
                                 const NormalizationConfig& cfg,
                                 const ExpansionLimits& lim) {
  std::vector<Diagnostic> out;
  for (const auto& [sid, synsets] : g.synsets) {
    const TaggedSentence* s = g.FindSentence(sid);
    if (s == nullptr) {
      out.push_back({Severity::kError, sid, "", LintCode::kUnknownSentence,
                     "synsets reference a sentence missing from the benchmark"});
      continue;
    }
    std::map<std::string, int> id_count;
    // Expanded keys of each well-formed synset, for overlap detection.
    std::vector<std::pair<const FactSynset*, std::vector<std::string>>> keyed;
    for (const FactSynset& f : synsets) {
      if (id_count[f.id]++ == 1) {
        out.push_back({Severity::kError, sid, f.id,
                       LintCode::kDuplicateSynsetId,
                       "synset id used more than once"});
      }
      if (f.triples.empty()) {
        out.push_back({Severity::kError, sid, f.id, LintCode::kEmptySynset,
                       "synset has no triples"});
        continue;
      }
      bool ok = true;
      for (std::size_t t = 0; t < f.triples.size(); ++t) {
        const TripleTemplate& tt = f.triples[t];
        const SlotTemplate* slots[] = {&tt.subject, &tt.predicate, &tt.object};
        for (int k = 0; k < 3; ++k) {
          std::string where =
              "triple " + std::to_string(t + 1) + " " + kSlotNames[k];
          ok = LintSlot(*slots[k], *s, f.id, where, out) && ok;
        }
      }
      if (!ok) continue;
      try {
        keyed.emplace_back(&f, ExpandSynset(f, *s, cfg, lim).keys);
      } catch (const Error& e) {
        out.push_back({Severity::kWarning, sid, f.id,
                       LintCode::kVariantLimitExceeded, e.message()});
      }
    }
    for (std::size_t a = 0; a < keyed.size(); ++a) {
      std::set<std::string> a_keys(keyed[a].second.begin(),
                                   keyed[a].second.end());
      for (std::size_t b = a + 1; b < keyed.size(); ++b) {
        std::size_t shared = 0;
        for (const std::string& k : keyed[b].second) shared += a_keys.count(k);
        if (shared == 0) continue;
        const std::string& ida = keyed[a].first->id;
        const std::string& idb = keyed[b].first->id;
        std::string n = std::to_string(shared);
        out.push_back({Severity::kWarning, sid, ida, LintCode::kGoldOverlap,
                       n + " realization(s) shared with synset " + idb});
        out.push_back({Severity::kWarning, sid, idb, LintCode::kGoldOverlap,
                       n + " realization(s) shared with synset " + ida});
      }
    }
  }
  SortDiagnostics(g, out);
  return out;
}

void SortDiagnostics(const GoldBenchmark& g, std::vector<Diagnostic>& diags) {
  std::map<std::string, std::size_t> sentence_pos;
  for (std::size_t i = 0; i < g.sentences.size(); ++i) {
    sentence_pos.emplace(g.sentences[i].id, i);
  }
  auto sentence_rank = [&](const std::string& sid) {
    auto it = sentence_pos.find(sid);
    return it == sentence_pos.end() ? g.sentences.size() : it->second;
  };
  auto synset_rank = [&](const Diagnostic& d) -> std::size_t {
    if (d.synset_id.empty()) return 0;
    auto it = g.synsets.find(d.sentence_id);
    if (it == g.synsets.end()) return 0;
    for (std::size_t i = 0; i < it->second.size(); ++i) {
      if (it->second[i].id == d.synset_id) return i + 1;
    }
    return it->second.size() + 1;
  };
  std::stable_sort(diags.begin(), diags.end(),
                   [&](const Diagnostic& a, const Diagnostic& b) {
                     auto ka = std::make_tuple(sentence_rank(a.sentence_id),
                                               a.sentence_id, synset_rank(a),
                                               a.synset_id, a.code);
                     auto kb = std::make_tuple(sentence_rank(b.sentence_id),
                                               b.sentence_id, synset_rank(b),
                                               b.synset_id, b.code);
                     return ka < kb;
                   });
}

}  // namespace factbench
